#pragma once

#include <string>

#include "monopath/engine.hpp"

namespace monopath::detail {

/// The witness if it is a genuine violation of T, otherwise a stall.
ViolationWitness certify_or_stall(const EdgeColouring& col, const ViolationWitness& w, const EngineConstants& k,
                                  const std::string& where);

/// Validates a monochromatic path and fills in target_met.
PathResult make_path(const EdgeColouring& col, Colour c, VertexPath p, const EngineConstants& k);

/// Brings a cycle into the medium band, shortening if needed.
std::variant<ColouredCycle, ViolationWitness> to_medium(const EdgeColouring& col, ColouredCycle c,
                                                        const EngineConstants& k, const std::string& where);

std::string describe(const VertexList& vs, std::size_t limit = 12);

}  // namespace monopath::detail
