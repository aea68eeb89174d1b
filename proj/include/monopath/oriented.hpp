#pragma once

// Embedding oriented paths through a mindegree pair, and the two-colour
// control flow that redirects wrong-colour finds.

#include <any>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monopath/core.hpp"
#include "monopath/engine.hpp"

namespace monopath {

struct PatternEmbedding {
  OrientedPathPattern pattern;
  VertexList map;  // pattern position -> vertex
};

bool validate_embedding(const Digraph& d, const PatternEmbedding& e);
bool validate_embedding(const EdgeColouring& col, const PatternEmbedding& e, Colour c);

/// An oracle declining to produce a path; `payload` is passed through untouched.
struct Abort {
  std::string reason;
  std::any payload;
};

using PathOracle = std::function<std::variant<VertexPath, Abort>(std::span<const Vertex>)>;

struct EmbedStats {
  int oracle_calls = 0;
  int cache_hits = 0;
  int smallest_query = -1;
};

/// Needs e(d) >= 4(x + |P|) |d|. The oracle is only queried on sets of at
/// least x vertices and must return a directed path inside the set, of
/// order at least the longest run of the pattern.
std::variant<PatternEmbedding, Abort> embed_oriented_path(const Digraph& d, const OrientedPathPattern& pattern,
                                                          int x, const PathOracle& oracle,
                                                          EmbedStats* stats = nullptr);

struct RamseyParams {
  double epsilon = 0.25;
  double sigma = 32;
  EngineOverrides engine;  // forwarded to every extract call
  std::optional<long> x, y;
};

struct ColouredEmbedding {
  Colour colour = kRed;
  PatternEmbedding embedding;
};

/// A proof step whose hypothesis does not hold on this instance.
struct HypothesisReport {
  std::string flag;
  std::string detail;
};

struct RamseyOutcome {
  std::variant<ColouredEmbedding, ViolationWitness, HypothesisReport> result;
  Trace trace;
};

RamseyOutcome ramsey_oriented_path(const EdgeColouring& col, const OrientedPathPattern& pattern,
                                   const RamseyParams& params = {});

}  // namespace monopath
