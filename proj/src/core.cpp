#include "monopath/core.hpp"

#include <cmath>
#include <sstream>

namespace monopath {

Digraph::Digraph(int n) : n_(n), out_(n, VertexBits(n)), in_(n, VertexBits(n)) {
  if (n < 0) throw PreconditionError("digraph order must be non-negative");
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

void Digraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (out_[u].test(v)) return;
  out_[u].set(v);
  in_[v].set(u);
  ++edges_;
}

void Digraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!out_[u].test(v)) return;
  out_[u].reset(v);
  in_[v].reset(u);
  --edges_;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = out_[u].first(); v >= 0; v = out_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

bool Digraph::is_oriented() const {
  for (Vertex u = 0; u < n_; ++u)
    if (out_[u].intersects(in_[u])) return false;
  return true;
}

InducedSubgraph induced(const Digraph& d, std::span<const Vertex> vertices) {
  InducedSubgraph sub{Digraph(static_cast<int>(vertices.size())), VertexList(vertices.begin(), vertices.end())};
  std::vector<int> local(d.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local[vertices[i]] >= 0) throw PreconditionError("duplicate vertex in induced subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& row = d.out(vertices[i]);
    for (Vertex v = row.first(); v >= 0; v = row.next(v + 1))
      if (local[v] >= 0) sub.graph.add_edge(static_cast<Vertex>(i), local[v]);
  }
  return sub;
}

Tournament::Tournament(Digraph d) : d_(std::move(d)) {
  const int n = d_.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d_.has_edge(u, v) == d_.has_edge(v, u))
        throw PreconditionError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                "} must carry exactly one orientation");
}

std::string colour_name(Colour c) {
  if (c == kRed) return "red";
  if (c == kBlue) return "blue";
  return "colour" + std::to_string(c);
}

EdgeColouring::EdgeColouring(Tournament t, int k, Colour fill)
    : base_(std::move(t)), k_(k), colour_(static_cast<std::size_t>(base_.order()) * base_.order(), -1) {
  if (k < 2) throw PreconditionError("a colouring needs k >= 2");
  if (fill < 0 || fill >= k) throw PreconditionError("fill colour out of range");
  const int n = order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && base_.beats(u, v)) colour_[index(u, v)] = static_cast<std::int8_t>(fill);
}

Colour EdgeColouring::colour(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order() || colour_[index(u, v)] < 0)
    throw PreconditionError("no edge " + std::to_string(u) + "->" + std::to_string(v));
  return colour_[index(u, v)];
}

void EdgeColouring::set(Vertex u, Vertex v, Colour c) {
  if (c < 0 || c >= k_) throw PreconditionError("colour " + std::to_string(c) + " out of range");
  if (u < 0 || v < 0 || u >= order() || v >= order() || colour_[index(u, v)] < 0)
    throw PreconditionError("no edge " + std::to_string(u) + "->" + std::to_string(v));
  colour_[index(u, v)] = static_cast<std::int8_t>(c);
}

EdgeColouring EdgeColouring::swapped() const {
  if (k_ != 2) throw PreconditionError("colour swap needs a two-colouring");
  EdgeColouring out = *this;
  for (auto& c : out.colour_)
    if (c >= 0) c = static_cast<std::int8_t>(1 - c);
  return out;
}

void CompleteDigraphColouring::set(Vertex u, Vertex v, Colour c) {
  if (u == v) throw PreconditionError("no loops in the complete digraph");
  if (c != kRed && c != kBlue) throw PreconditionError("complete digraph colourings use two colours");
  colour_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(c);
}

int OrientedPathPattern::edge_count() const {
  int s = 0;
  for (int x : segments) s += x;
  return s;
}

int OrientedPathPattern::longest_run() const {
  int m = 0;
  for (int x : segments) m = std::max(m, x);
  return m;
}

bool OrientedPathPattern::edge_is_forward(int i) const {
  int seen = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    seen += segments[s];
    if (i < seen) return s % 2 == 0;
  }
  throw PreconditionError("pattern edge index out of range");
}

OrientedPathPattern OrientedPathPattern::parse(const std::string& text) {
  OrientedPathPattern p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("malformed pattern '" + text + "'");
    }
    if (used != item.size() || v < 1) throw PreconditionError("malformed pattern '" + text + "'");
    p.segments.push_back(v);
  }
  if (p.segments.empty()) throw PreconditionError("empty pattern");
  return p;
}

std::string OrientedPathPattern::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(segments[i]);
  }
  return s;
}

void PseudorandomParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2)");
  if (k0 < 1) throw PreconditionError("k0 must be at least 1");
}

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }
int floor_int(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

long required_edges(double epsilon, std::size_t a, std::size_t b) {
  return static_cast<long>(std::ceil(epsilon * static_cast<double>(a) * static_cast<double>(b) - 1e-9));
}

void require_disjoint(int n, std::span<const Vertex> A, std::span<const Vertex> B) {
  VertexBits seen(n);
  for (Vertex v : A) {
    if (v < 0 || v >= n) throw PreconditionError("vertex out of range");
    seen.set(v);
  }
  for (Vertex v : B) {
    if (v < 0 || v >= n) throw PreconditionError("vertex out of range");
    if (seen.test(v)) throw PreconditionError("sets must be disjoint (vertex " + std::to_string(v) + ")");
  }
}

long count_edges(const Digraph& d, std::span<const Vertex> A, std::span<const Vertex> B) {
  require_disjoint(d.order(), A, B);
  const VertexBits target = VertexBits::from_list(d.order(), B);
  long total = 0;
  for (Vertex u : A) total += d.out(u).count_and(target);
  return total;
}

Digraph colour_class(const EdgeColouring& col, Colour c) {
  if (c < 0 || c >= col.colours()) throw PreconditionError("colour out of range");
  const Digraph& base = col.tournament().digraph();
  Digraph d(col.order());
  for (auto [u, v] : base.edges())
    if (col.colour(u, v) == c) d.add_edge(u, v);
  return d;
}

Digraph colour_class(const CompleteDigraphColouring& col, Colour c) {
  Digraph d(col.order());
  for (Vertex u = 0; u < col.order(); ++u)
    for (Vertex v = 0; v < col.order(); ++v)
      if (u != v && col.colour(u, v) == c) d.add_edge(u, v);
  return d;
}

namespace {

bool distinct_in_range(int n, const VertexList& vs) {
  std::vector<char> seen(n, 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

bool validate_path(const Digraph& d, const VertexPath& p) {
  if (!distinct_in_range(d.order(), p.vertices)) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!d.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

bool validate_path(const EdgeColouring& col, const VertexPath& p, Colour c) {
  if (!validate_path(col.tournament().digraph(), p)) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (col.colour(p.vertices[i], p.vertices[i + 1]) != c) return false;
  return true;
}

bool validate_cycle(const Digraph& d, const VertexCycle& c) {
  if (c.vertices.size() < 2 || !distinct_in_range(d.order(), c.vertices)) return false;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (!d.has_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()])) return false;
  return true;
}

bool validate_cycle(const EdgeColouring& col, const VertexCycle& cyc, Colour c) {
  if (!validate_cycle(col.tournament().digraph(), cyc)) return false;
  for (std::size_t i = 0; i < cyc.vertices.size(); ++i)
    if (col.colour(cyc.vertices[i], cyc.vertices[(i + 1) % cyc.vertices.size()]) != c) return false;
  return true;
}

bool verify_witness(const Tournament& t, const ViolationWitness& w, int k0) {
  if (static_cast<int>(w.A.size()) < k0 || static_cast<int>(w.B.size()) < k0) return false;
  if (!distinct_in_range(t.order(), w.A) || !distinct_in_range(t.order(), w.B)) return false;
  try {
    if (count_edges(t, w.A, w.B) != w.observed) return false;
  } catch (const PreconditionError&) {
    return false;
  }
  return w.required == required_edges(w.epsilon, w.A.size(), w.B.size()) && w.observed < w.required;
}

std::optional<ViolationWitness> certify_violation(const Tournament& t, VertexList A, VertexList B,
                                                  double epsilon, int k0) {
  if (static_cast<int>(A.size()) < k0 || static_cast<int>(B.size()) < k0) return std::nullopt;
  ViolationWitness w;
  w.observed = count_edges(t, A, B);
  w.required = required_edges(epsilon, A.size(), B.size());
  w.epsilon = epsilon;
  if (w.observed >= w.required) return std::nullopt;
  w.A = std::move(A);
  w.B = std::move(B);
  return w;
}

VertexList SubColouring::lift(std::span<const Vertex> local) const {
  VertexList out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

SubColouring restrict_colouring(const EdgeColouring& col, std::span<const Vertex> vertices) {
  InducedSubgraph sub = induced(col.tournament().digraph(), vertices);
  EdgeColouring out(Tournament(std::move(sub.graph)), col.colours());
  const int m = static_cast<int>(vertices.size());
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < m; ++j)
      if (i != j && out.tournament().beats(i, j)) out.set(i, j, col.colour(vertices[i], vertices[j]));
  return {std::move(out), std::move(sub.to_parent)};
}

}  // namespace monopath
