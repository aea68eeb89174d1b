#pragma once

// The combinatorial lemmas as standalone procedures. Ties are broken by
// lowest vertex id throughout.

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "monopath/core.hpp"

namespace monopath {

struct DfsPartition {
  VertexPath path;
  VertexList U;  // finished vertices
  VertexList W;  // never visited
};

struct GhrvCertificate {
  Digraph acyclic_subgraph;
  std::vector<int> levels;
  VertexPath longest_path;
};

struct MindegreePair {
  VertexList X;
  VertexList Y;
  int mindeg = 0;
};

/// Cycle of length >= k+1 when every in-degree is >= k >= 1.
VertexCycle front_extend_cycle(const Digraph& d, int k);

/// Same, restricted to the vertices of `span`, whose induced in-degrees
/// must all be >= k. Returned ids are those of `d`.
VertexCycle front_extend_cycle(const Digraph& d, const VertexBits& span, int k);

/// Path/U/W split with no edge from U to W and |U| = |W|.
DfsPartition dfs_partition(const Digraph& d);
/// Runs on the subgraph induced by `span`; U, W, path use ids of `d`.
DfsPartition dfs_partition(const Digraph& d, const VertexBits& span);

using CycleOrWitness = std::variant<VertexCycle, ViolationWitness>;

/// Cycle alternating between A and B of length >= max(2, eps*m/4 rounded
/// up to even), or a witness pair in `d`: (B, A) below eps*m^2, or sets of
/// size >= ceil(eps*m/8) with no edge between them.
CycleOrWitness alternating_cycle(const Digraph& d, std::span<const Vertex> A, std::span<const Vertex> B,
                                 double epsilon);
int alternating_cycle_target(double epsilon, int m);

GhrvCertificate ghrv_path(const Digraph& d);
GhrvCertificate ghrv_path(const Digraph& d, const VertexBits& span);

/// Red path of order >= x or blue path of order >= y; requires
/// n >= (x-1)(y-1)+1.
std::pair<Colour, VertexPath> asym_paths(const EdgeColouring& col, int x, int y);

struct RaynaudResult {
  Colour colour = kRed;
  VertexPath path;
  VertexPath red;   // the final partition into one red and one blue path
  VertexPath blue;
};

/// Monochromatic path of order >= ceil(n/2) in a two-coloured complete digraph.
RaynaudResult raynaud_partition(const CompleteDigraphColouring& h);
inline std::pair<Colour, VertexPath> raynaud_path(const CompleteDigraphColouring& h) {
  auto r = raynaud_partition(h);
  return {r.colour, std::move(r.path)};
}

/// Walks C_1, C_2, ... in order; each cycle is left at the last vertex
/// (from its entry) that has an edge into the next cycle.
VertexPath join_cycle_paths(const Digraph& d, const std::vector<VertexCycle>& cycles);

using Ordering = VertexList;
using OrderingOrCycle = std::variant<Ordering, VertexCycle>;

/// Ordering where each vertex has <= t in-neighbours later in the order, or
/// a cycle of length >= t+2.
OrderingOrCycle low_indegree_order(const Digraph& d, int t);
OrderingOrCycle low_indegree_order(const Digraph& d, std::span<const Vertex> vertices, int t);

/// Requires e(d) >= dd * n. Returns a pair with mindeg >= ceil(dd/4).
MindegreePair min_deg_pair(const Digraph& d, double dd);

/// Transitive subtournament v_1 -> ... -> v_q with q >= floor(log2 |S|) + 1.
VertexList extract_transitive(const Tournament& t, std::span<const Vertex> S);

}  // namespace monopath
