#pragma once

// Seeded instance generation and pseudorandomness certification.
//
// All randomness is counter based: the word for (seed, stream, index) is a
// SplitMix64 finalisation of the three inputs, so the orientation of a pair
// depends only on the seed and the pair's lexicographic index.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "monopath/core.hpp"

namespace monopath {

using Seed = std::uint64_t;

std::uint64_t mix64(std::uint64_t x);
std::uint64_t stream_word(Seed seed, std::uint64_t stream, std::uint64_t index);

/// Small sequential generator for sampling loops; fully specified so
/// results are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

Tournament random_tournament(int n, Seed seed);
Tournament transitive_tournament(int n);
EdgeColouring random_colouring(const Tournament& t, int k, Seed seed);
/// Oriented graph: each pair present with probability p, direction uniform.
Digraph random_oriented_graph(int n, double p, Seed seed);

/// sigma = 2 (1/2 - eps)^-2.
double sigma_for_epsilon(double epsilon);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PseudorandomReport {
  bool ok = true;  // exact: certified; sampled: no violation found
  std::optional<ViolationWitness> witness;
  std::uint64_t pairs_examined = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 50'000'000;

/// Number of ordered pairs (A, B) of disjoint k0-sets; saturates at UINT64_MAX.
std::uint64_t exact_pair_count(int n, int k0);

/// Exact check over all disjoint pairs with |A| = |B| = k0 (sufficient by
/// averaging over k0-subsets of larger sets). A is scanned by lexicographic
/// order of its mirrored ids (n-1-v), B lexicographically, so the first
/// witness pairs high-index A with low-index B.
PseudorandomReport check_pseudorandom_exact(const Tournament& t, const PseudorandomParams& p,
                                            std::uint64_t budget = kDefaultExactBudget);

/// Samples `trials` disjoint pairs of k0-sets. Each trial draws a uniform
/// pair and then runs `refine_rounds` greedy rounds (A := k0 vertices with
/// fewest edges into B, then B := k0 vertices with fewest edges from A).
/// Trials use independent streams, so the first witness is deterministic.
PseudorandomReport check_pseudorandom_sampled(const Tournament& t, const PseudorandomParams& p, int trials,
                                              Seed seed, int refine_rounds = 2);

}  // namespace monopath
