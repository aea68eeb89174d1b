#include "monopath/oriented.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace monopath {

namespace {

bool embedding_shape_ok(int n, const PatternEmbedding& e) {
  if (static_cast<int>(e.map.size()) != e.pattern.order()) return false;
  VertexBits seen(n);
  for (Vertex v : e.map) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

}  // namespace

bool validate_embedding(const Digraph& d, const PatternEmbedding& e) {
  if (e.pattern.segments.empty() || !embedding_shape_ok(d.order(), e)) return false;
  for (int i = 0; i + 1 < e.pattern.order(); ++i) {
    const bool ok = e.pattern.edge_is_forward(i) ? d.has_edge(e.map[i], e.map[i + 1])
                                                 : d.has_edge(e.map[i + 1], e.map[i]);
    if (!ok) return false;
  }
  return true;
}

bool validate_embedding(const EdgeColouring& col, const PatternEmbedding& e, Colour c) {
  return validate_embedding(colour_class(col, c), e);
}

std::variant<PatternEmbedding, Abort> embed_oriented_path(const Digraph& d, const OrientedPathPattern& pattern,
                                                          int x, const PathOracle& oracle, EmbedStats* stats) {
  if (pattern.segments.empty()) throw PreconditionError("pattern has no segments");
  if (x < 1) throw PreconditionError("x must be >= 1");
  const int n = d.order();
  const int order = pattern.order();
  const double dd = 4.0 * (x + order);
  if (static_cast<double>(d.edge_count()) < dd * n)
    throw PreconditionError("embed_oriented_path needs e(D) >= 4(x+|P|)|D| = " +
                            std::to_string(static_cast<long>(dd * n)) + "; have " +
                            std::to_string(d.edge_count()));
  const MindegreePair mp = min_deg_pair(d, dd);
  const VertexBits A = VertexBits::from_list(n, mp.X);
  const VertexBits B = VertexBits::from_list(n, mp.Y);

  EmbedStats local;
  EmbedStats& st = stats ? *stats : local;
  std::map<VertexList, std::variant<VertexPath, Abort>> cache;
  VertexBits used(n);
  PatternEmbedding emb{pattern, {}};
  emb.map.push_back(mp.X.front());
  used.set(mp.X.front());

  for (std::size_t i = 0; i < pattern.segments.size(); ++i) {
    const int len = pattern.segments[i];
    const bool forward = i % 2 == 0;
    const Vertex j = emb.map.back();
    // forward segments leave A through an A->B edge; backward ones enter a B vertex from A
    if (!(forward ? A : B).test(j)) throw std::logic_error("embed_oriented_path: junction on the wrong side");
    VertexBits s = forward ? d.out(j) : d.in(j);
    s &= forward ? B : A;
    s.subtract(used);
    const VertexList S = s.to_list();
    if (static_cast<int>(S.size()) < x) throw std::logic_error("embed_oriented_path: query set below x");
    ++st.oracle_calls;
    if (st.smallest_query < 0 || static_cast<int>(S.size()) < st.smallest_query)
      st.smallest_query = static_cast<int>(S.size());
    auto it = cache.find(S);
    if (it == cache.end())
      it = cache.emplace(S, oracle(S)).first;
    else
      ++st.cache_hits;
    if (auto* ab = std::get_if<Abort>(&it->second)) return *ab;
    const VertexPath& p = std::get<VertexPath>(it->second);
    if (p.order() < len || !validate_path(d, p) ||
        !std::all_of(p.vertices.begin(), p.vertices.end(), [&](Vertex v) { return s.test(v); }))
      throw std::logic_error("embed_oriented_path: oracle path breaks its contract");
    for (int t = 0; t < len; ++t) {
      const Vertex v = forward ? p.vertices[t] : p.vertices[p.order() - 1 - t];
      emb.map.push_back(v);
      used.set(v);
    }
    if (!(forward ? B : A).test(emb.map.back()))
      throw std::logic_error("embed_oriented_path: segment ended on the wrong side");
  }
  if (!validate_embedding(d, emb)) throw std::logic_error("embed_oriented_path: invalid embedding");
  return emb;
}

namespace {

struct Found {
  ColouredEmbedding e;
};
struct Redirect {
  VertexPath path;  // parent ids, colour of the outer attempt
};

class RamseySolver {
 public:
  RamseySolver(const EdgeColouring& col, const OrientedPathPattern& pattern, const RamseyParams& p, long x, long y,
               Trace& trace)
      : col_(col), pattern_(pattern), p_(p), x_(x), y_(y), tr_(trace), target_(pattern.longest_run() + 1) {
    classes_[kRed] = colour_class(col, kRed);
    classes_[kBlue] = colour_class(col, kBlue);
  }

  RamseyOutcome run();

 private:
  struct Search {
    std::optional<VertexPath> want, other;
    std::optional<ViolationWitness> violation;
  };

  // extract on the induced sub-colouring, both targets ell+1
  Search search(Colour want, std::span<const Vertex> S) {
    Search r;
    const SubColouring sub = restrict_colouring(col_, S);
    ExtractOutcome o = extract(sub.colouring, target_, target_, p_.epsilon, p_.sigma, p_.engine);
    if (auto* w = std::get_if<ViolationWitness>(&o.result)) {
      ViolationWitness lifted{sub.lift(w->A), sub.lift(w->B), w->observed, w->required, w->epsilon};
      std::sort(lifted.A.begin(), lifted.A.end());
      std::sort(lifted.B.begin(), lifted.B.end());
      r.violation = std::move(lifted);
      return r;
    }
    const auto& pr = std::get<PathResult>(o.result);
    if (pr.path.order() >= target_) (pr.colour == want ? r.want : r.other) = VertexPath{sub.lift(pr.path.vertices)};
    return r;
  }

  std::optional<VertexPath> dfs_path(Colour c, std::span<const Vertex> S) {
    auto part = dfs_partition(classes_[c], VertexBits::from_list(col_.order(), S));
    if (part.path.order() >= target_) return part.path;
    return std::nullopt;
  }

  std::variant<VertexPath, Abort> outer_oracle(Colour kappa, std::span<const Vertex> S);

  const EdgeColouring& col_;
  const OrientedPathPattern& pattern_;
  const RamseyParams& p_;
  long x_, y_;
  Trace& tr_;
  int target_;
  Digraph classes_[2];
};

std::variant<VertexPath, Abort> RamseySolver::outer_oracle(Colour kappa, std::span<const Vertex> S) {
  Search s = search(kappa, S);
  if (s.violation) return Abort{"violation", *s.violation};
  if (s.want) return *s.want;
  if (auto p = dfs_path(kappa, S)) return *p;
  // no kappa path here: try the other colour inside S, where U -> W edges are all that colour
  const Colour other = other_colour(kappa);
  const InducedSubgraph H = induced(classes_[other], S);
  const long need = 4 * (x_ + pattern_.order()) * static_cast<long>(S.size());
  if (static_cast<long>(H.graph.edge_count()) < need)
    return Abort{"hypothesis", HypothesisReport{"nested-density",
                                                colour_name(other) + " edges inside a subset of " +
                                                    std::to_string(S.size()) + " vertices: " +
                                                    std::to_string(H.graph.edge_count()) + " < 4(x+|P|)|H| = " +
                                                    std::to_string(need)}};
  const int n = col_.order();
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < H.to_parent.size(); ++i) local[H.to_parent[i]] = static_cast<int>(i);
  PathOracle inner = [&](std::span<const Vertex> Sl) -> std::variant<VertexPath, Abort> {
    VertexList Sp;
    for (Vertex v : Sl) Sp.push_back(H.to_parent[v]);
    std::sort(Sp.begin(), Sp.end());
    Search t = search(other, Sp);
    if (t.violation) return Abort{"violation", *t.violation};
    std::optional<VertexPath> got = t.want;
    if (!got) got = dfs_path(other, Sp);
    if (got) {
      VertexPath mapped;
      for (Vertex v : got->vertices) mapped.vertices.push_back(local[v]);
      return mapped;
    }
    if (t.other) return Abort{"redirect", Redirect{*t.other}};
    if (auto q = dfs_path(kappa, Sp)) return Abort{"redirect", Redirect{*q}};
    return Abort{"hypothesis", HypothesisReport{"subset-without-path",
                                                "no monochromatic path of order " + std::to_string(target_) +
                                                    " found in a subset of " + std::to_string(Sp.size())}};
  };
  auto r = embed_oriented_path(H.graph, pattern_, static_cast<int>(x_), inner);
  if (auto* e = std::get_if<PatternEmbedding>(&r)) {
    PatternEmbedding lifted{pattern_, {}};
    for (Vertex v : e->map) lifted.map.push_back(H.to_parent[v]);
    tr_.push_back("nested " + colour_name(other) + " embedding succeeded inside a subset of " +
                  std::to_string(S.size()));
    return Abort{"found", Found{{other, std::move(lifted)}}};
  }
  Abort& ab = std::get<Abort>(r);
  if (ab.reason == "redirect") {
    tr_.push_back("redirected a " + colour_name(kappa) + " path out of the nested attempt");
    return std::any_cast<Redirect>(ab.payload).path;
  }
  return ab;
}

RamseyOutcome RamseySolver::run() {
  RamseyOutcome out;
  const int n = col_.order();
  if (pattern_.segments.size() == 1) {
    const int want = pattern_.segments[0] + 1;
    ExtractOutcome o = extract(col_, want, want, p_.epsilon, p_.sigma, p_.engine);
    tr_.insert(tr_.end(), o.trace.begin(), o.trace.end());
    if (auto* w = std::get_if<ViolationWitness>(&o.result)) {
      out.result = *w;
      return out;
    }
    const auto& pr = std::get<PathResult>(o.result);
    if (pr.path.order() < want) {
      out.result = HypothesisReport{"extract-target", "longest path found has order " +
                                                          std::to_string(pr.path.order()) + " < " +
                                                          std::to_string(want)};
      return out;
    }
    PatternEmbedding e{pattern_, VertexList(pr.path.vertices.begin(), pr.path.vertices.begin() + want)};
    out.result = ColouredEmbedding{pr.colour, std::move(e)};
    return out;
  }

  const Colour kappa = classes_[kRed].edge_count() >= classes_[kBlue].edge_count() ? kRed : kBlue;
  const long need = 4 * (y_ + pattern_.order()) * static_cast<long>(n);
  tr_.push_back("majority colour " + colour_name(kappa) + " with " + std::to_string(classes_[kappa].edge_count()) +
                " edges; Lemma needs " + std::to_string(need));
  if (static_cast<long>(classes_[kappa].edge_count()) < need) {
    out.result = HypothesisReport{"majority-density", colour_name(kappa) + " has " +
                                                          std::to_string(classes_[kappa].edge_count()) +
                                                          " edges < 4(y+|P|)|T| = " + std::to_string(need)};
    return out;
  }
  PathOracle top = [&](std::span<const Vertex> S) { return outer_oracle(kappa, S); };
  auto r = embed_oriented_path(classes_[kappa], pattern_, static_cast<int>(y_), top);
  if (auto* e = std::get_if<PatternEmbedding>(&r)) {
    out.result = ColouredEmbedding{kappa, std::move(*e)};
    return out;
  }
  Abort& ab = std::get<Abort>(r);
  if (ab.reason == "found")
    out.result = std::any_cast<Found>(ab.payload).e;
  else if (ab.reason == "violation")
    out.result = std::any_cast<ViolationWitness>(ab.payload);
  else
    out.result = std::any_cast<HypothesisReport>(ab.payload);
  return out;
}

}  // namespace

RamseyOutcome ramsey_oriented_path(const EdgeColouring& col, const OrientedPathPattern& pattern,
                                   const RamseyParams& params) {
  if (col.colours() != 2) throw PreconditionError("ramsey_oriented_path needs a two-colouring");
  if (pattern.segments.empty()) throw PreconditionError("pattern has no segments");
  const int n = col.order();
  if (pattern.order() > n)
    throw PreconditionError("pattern on " + std::to_string(pattern.order()) + " vertices cannot fit in " +
                            std::to_string(n));
  const long x = params.x.value_or(static_cast<long>(std::ceil(params.epsilon * std::ldexp(1.0, -12) * n - 1e-9)));
  const long y = params.y.value_or(static_cast<long>(std::ceil(n / 32.0 - 1e-9)));
  if (x < 1 || y < 1) throw PreconditionError("x and y must be >= 1");
  Trace trace;
  trace.push_back("x=" + std::to_string(x) + " y=" + std::to_string(y) + " ell=" +
                  std::to_string(pattern.longest_run()));
  if (x < pattern.order()) trace.push_back("hypothesis x >= |P| fails");
  if (2.0 * std::log2(static_cast<double>(x)) < std::log2(static_cast<double>(n)))
    trace.push_back("hypothesis 2 log x >= log |T| fails");
  RamseySolver solver(col, pattern, params, x, y, trace);
  RamseyOutcome out = solver.run();
  out.trace.insert(out.trace.begin(), trace.begin(), trace.end());
  if (auto* e = std::get_if<ColouredEmbedding>(&out.result))
    if (!validate_embedding(col, e->embedding, e->colour))
      throw std::logic_error("ramsey_oriented_path produced an invalid embedding");
  return out;
}

}  // namespace monopath
