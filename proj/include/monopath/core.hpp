#pragma once

// Domain types shared by every module: bit-row digraphs, tournaments,
// edge colourings, vertex paths/cycles and pseudorandomness witnesses.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monopath {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-size bitset over vertex ids [0, size).
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  int count_and(const VertexBits& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }
  bool intersects(const VertexBits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  VertexBits& operator&=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBits& operator|=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  VertexBits& subtract(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// Lowest set bit >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= size_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  Vertex first() const { return next(0); }

  VertexList to_list() const {
    VertexList out;
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }
  static VertexBits from_list(int size, std::span<const Vertex> vs) {
    VertexBits b(size);
    for (Vertex v : vs) b.set(v);
    return b;
  }

  bool operator==(const VertexBits&) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Directed graph stored as bit rows of out- and in-neighbours. Self-loops
/// are rejected; antiparallel pairs are permitted (complete digraphs and
/// dense test graphs need them), `is_oriented()` reports their absence.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const { return n_; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return out_[u].test(v); }

  const VertexBits& out(Vertex u) const { return out_[u]; }
  const VertexBits& in(Vertex v) const { return in_[v]; }
  int out_degree(Vertex u) const { return out_[u].count(); }
  int in_degree(Vertex v) const { return in_[v].count(); }
  std::size_t edge_count() const { return edges_; }

  /// Edges in lexicographic (u, v) order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  bool is_oriented() const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<VertexBits> out_;
  std::vector<VertexBits> in_;
};

/// Induced subgraph on `vertices`, relabelled 0..k-1; `to_parent[i]` is the
/// original id of new vertex i.
struct InducedSubgraph {
  Digraph graph;
  VertexList to_parent;
};
InducedSubgraph induced(const Digraph& d, std::span<const Vertex> vertices);

/// Orientation of the complete graph: exactly one of u->v, v->u per pair.
class Tournament {
 public:
  Tournament() = default;
  /// Throws PreconditionError unless `d` is a tournament.
  explicit Tournament(Digraph d);

  int order() const { return d_.order(); }
  bool beats(Vertex u, Vertex v) const { return d_.has_edge(u, v); }
  const Digraph& digraph() const { return d_; }
  bool operator==(const Tournament&) const = default;

 private:
  Digraph d_;
};

using Colour = int;
inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour other_colour(Colour c) { return 1 - c; }
std::string colour_name(Colour c);

/// Total map from the edges of a tournament to colours 0..k-1.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  /// Every edge starts with colour `fill`.
  EdgeColouring(Tournament t, int k, Colour fill = kRed);

  int order() const { return base_.order(); }
  int colours() const { return k_; }
  const Tournament& tournament() const { return base_; }

  /// Colour of the edge u->v; throws if u->v is not an edge.
  Colour colour(Vertex u, Vertex v) const;
  /// Colour of whichever orientation of {u, v} is present.
  Colour colour_between(Vertex u, Vertex v) const {
    return colour_[index(u, v)] >= 0 ? colour_[index(u, v)] : colour_[index(v, u)];
  }
  void set(Vertex u, Vertex v, Colour c);

  /// Exchange colours 0 and 1 (two-colourings only).
  EdgeColouring swapped() const;

  bool operator==(const EdgeColouring&) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(order()) + static_cast<std::size_t>(v);
  }

  Tournament base_;
  int k_ = 2;
  std::vector<std::int8_t> colour_;  // -1 where u->v is absent
};

/// Two-colouring of every ordered pair of the complete digraph.
class CompleteDigraphColouring {
 public:
  CompleteDigraphColouring() = default;
  explicit CompleteDigraphColouring(int n, Colour fill = kRed)
      : n_(n), colour_(static_cast<std::size_t>(n) * n, static_cast<std::int8_t>(fill)) {}

  int order() const { return n_; }
  Colour colour(Vertex u, Vertex v) const { return colour_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(Vertex u, Vertex v, Colour c);

 private:
  int n_ = 0;
  std::vector<std::int8_t> colour_;
};

struct VertexPath {
  VertexList vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  /// Number of edges.
  int length() const { return vertices.empty() ? 0 : order() - 1; }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const VertexPath&) const = default;
};

struct VertexCycle {
  VertexList vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const VertexCycle&) const = default;
};

/// Oriented path with segment lengths n_1..n_k; segment 1 is directed
/// forward and directions alternate.
struct OrientedPathPattern {
  std::vector<int> segments;

  int edge_count() const;
  int order() const { return edge_count() + 1; }
  /// Length of the longest directed run.
  int longest_run() const;
  /// Direction of the edge between positions i and i+1.
  bool edge_is_forward(int i) const;

  /// Parses "3,2,1". Throws PreconditionError on malformed input.
  static OrientedPathPattern parse(const std::string& text);
  std::string to_string() const;
};

struct PseudorandomParams {
  double epsilon = 0.25;
  int k0 = 1;

  void validate() const;
};

/// Disjoint sets A, B, both of size >= k0, with e(A, B) < ceil(eps |A||B|).
struct ViolationWitness {
  VertexList A;
  VertexList B;
  long observed = 0;
  long required = 0;
  double epsilon = 0.0;
};

/// ceil(eps * a * b), tolerant of floating error at exact products.
long required_edges(double epsilon, std::size_t a, std::size_t b);
int ceil_int(double x);
int floor_int(double x);

/// Number of edges u->v with u in A, v in B. A and B must be disjoint.
long count_edges(const Digraph& d, std::span<const Vertex> A, std::span<const Vertex> B);
inline long count_edges(const Tournament& t, std::span<const Vertex> A, std::span<const Vertex> B) {
  return count_edges(t.digraph(), A, B);
}

Digraph colour_class(const EdgeColouring& col, Colour c);
Digraph colour_class(const CompleteDigraphColouring& col, Colour c);

bool validate_path(const Digraph& d, const VertexPath& p);
bool validate_path(const EdgeColouring& col, const VertexPath& p, Colour c);
bool validate_cycle(const Digraph& d, const VertexCycle& c);
bool validate_cycle(const EdgeColouring& col, const VertexCycle& cyc, Colour c);

/// Recounts the witness on `t` and checks disjointness, sizes >= k0 and
/// observed < required.
bool verify_witness(const Tournament& t, const ViolationWitness& w, int k0);

/// Returns a witness for (A, B) iff it genuinely violates (eps, k0)
/// pseudorandomness of `t`.
std::optional<ViolationWitness> certify_violation(const Tournament& t, VertexList A, VertexList B,
                                                  double epsilon, int k0);

/// Colouring induced on `vertices`, relabelled 0..k-1.
struct SubColouring {
  EdgeColouring colouring;
  VertexList to_parent;

  VertexList lift(std::span<const Vertex> local) const;
};
SubColouring restrict_colouring(const EdgeColouring& col, std::span<const Vertex> vertices);

/// Throws PreconditionError if A and B intersect or contain invalid ids.
void require_disjoint(int n, std::span<const Vertex> A, std::span<const Vertex> B);

}  // namespace monopath
