#pragma once

// Exact brute-force references for small instances.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monopath/core.hpp"

namespace monopath {

struct ExactReport {
  int value = 0;
  std::variant<std::monostate, VertexPath, EdgeColouring, std::vector<int>> witness;
  std::string method;
  std::uint64_t work = 0;
};

inline constexpr int kLongestPathLimit = 20;
inline constexpr int kMOfTLimit = 6;
inline constexpr int kChromaticLimit = 12;

/// Longest directed path (by order) via DP over (subset, last vertex).
ExactReport longest_path_exact(const Digraph& d);
/// Independent memoised DFS over (visited set, current vertex); n <= 16.
ExactReport longest_path_exact_dfs(const Digraph& d);

/// One report per colour.
std::vector<ExactReport> longest_mono_dirpath_exact(const EdgeColouring& col);
int longest_mono_order(const EdgeColouring& col);

/// min over 2-colourings of the longest monochromatic path order; the
/// witness is an extremal colouring.
ExactReport m_of_T_exact(const Tournament& t);

/// Chromatic number of the underlying graph, witness = proper colouring.
ExactReport chromatic_number_exact(const Digraph& d);

}  // namespace monopath
