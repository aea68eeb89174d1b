#pragma once

// Constructive two-colour path extraction on pseudorandom tournaments, and
// the k-colour reduction to it.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monopath/core.hpp"
#include "monopath/primitives.hpp"

namespace monopath {

struct EngineOverrides {
  std::optional<double> a, b, d;
  std::optional<long> k_block, x_target, y_target, medium_lo, medium_hi;
  std::optional<long> aux_threshold, redred_size, order_threshold, k0, sender_guarantee;

  bool any() const;
  /// Sets one field from "key=value"; throws PreconditionError on unknown keys.
  void set(const std::string& assignment);
};

struct HypothesisFlags {
  bool r_within = false;   // r <= c n
  bool s_within = false;   // s <= c n
  bool rs_within = false;  // r s <= c n^2 / log2 n
  bool holds() const { return r_within && s_within && rs_within; }
  bool k_block_exceeds_n = false;
  bool overridden_regime = false;
};

struct EngineConstants {
  double epsilon = 0.25, sigma = 32;
  int n = 1;
  long r = 1, s = 1;
  double log2n = 0;

  double a = 0, b = 0, d = 0;
  long k_block = 0, x_target = 0, y_target = 0;
  double c_general = 0, c_path = 0;
  long medium_lo = 0, medium_hi = 0;

  long aux_threshold = 0;     // senders needed for a blue auxiliary edge
  long redred_size = 0;       // |A| = |B| for red-red intersections
  long order_threshold = 0;   // back in-degree bound of the Case 2 ordering
  long k0 = 0;                // pseudorandomness set size
  long sender_guarantee = 0;  // promised senders between intersections

  HypothesisFlags flags;
  std::vector<std::string> overridden;
};

/// The optimisation remark's stated value, kept for reports next to c_path.
inline constexpr double kStatedC = 2097152.0;  // 2^21

EngineConstants derive_constants(double epsilon, double sigma, int n, long r, long s,
                                 const EngineOverrides& overrides = {});

/// Raised inside the pipeline when a step the proof guarantees does not go
/// through and no genuine violation can be certified.
class HypothesisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColouredCycle {
  VertexCycle cycle;
  Colour colour = kRed;
};

struct CycleCollection {
  std::vector<ColouredCycle> cycles;
  VertexList covered_list() const;
  int covered() const;
};

struct PathResult {
  Colour colour = kRed;
  VertexPath path;
  bool target_met = false;
};

using Trace = std::vector<std::string>;

struct ExtractOutcome {
  std::variant<PathResult, ViolationWitness> result;
  Trace trace;
  bool is_path() const { return std::holds_alternative<PathResult>(result); }
};

struct MediumNotFound {
  Ordering red, blue;
};

using MediumSearch = std::variant<ColouredCycle, MediumNotFound, ViolationWitness>;

MediumSearch find_medium_cycle(const EdgeColouring& col, std::span<const Vertex> S, const EngineConstants& k);

/// C must be monochromatic in `colour` and longer than medium_hi.
std::variant<ColouredCycle, ViolationWitness> shorten_long_cycle(const EdgeColouring& col, const VertexCycle& C,
                                                                 Colour colour, const EngineConstants& k);

struct RedRedResult {
  VertexCycle red;
  VertexList intersection;  // red cycle within C_i
};

std::variant<RedRedResult, ViolationWitness> red_red_intersection(const EdgeColouring& col, const VertexCycle& Ci,
                                                                  const VertexCycle& Cj, const EngineConstants& k);

ExtractOutcome case1_path(const EdgeColouring& col, const CycleCollection& coll, const EngineConstants& k);

struct Restart {
  ColouredCycle cycle;
};

struct Case2State {
  Ordering ordering;
  std::vector<VertexList> blocks;
  std::vector<Colour> block_colour;
  std::vector<std::vector<std::pair<Colour, VertexPath>>> bank;  // per block
  Colour chain_colour = kRed;
  std::vector<int> chain_blocks;                      // block ids in chaining order
  std::vector<std::vector<VertexPath>> frontier;      // paths from X_i, per chain step
};

struct Case2Outcome {
  std::variant<PathResult, ViolationWitness, Restart> result;
  Trace trace;
};

Case2Outcome case2_paths(const EdgeColouring& col, std::span<const Vertex> U, const EngineConstants& k,
                         Case2State* state = nullptr);

/// Blue path of order >= r or red path of order >= s, or a violation.
/// Path outcomes always validate; target_met reports whether the order
/// target of the returned colour was reached.
ExtractOutcome extract(const EdgeColouring& col, long r, long s, double epsilon, double sigma,
                       const EngineOverrides& overrides = {});

struct ShrinkReport {
  std::vector<VertexList> chain;  // vertex sets after each reduction
  std::string reason;
};

struct KColourOutcome {
  std::variant<PathResult, ViolationWitness, ShrinkReport> result;
  Trace trace;
};

KColourOutcome k_colour_extract(const EdgeColouring& col, long target, double epsilon, double sigma,
                                const EngineOverrides& overrides = {});

}  // namespace monopath
