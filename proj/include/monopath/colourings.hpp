#pragma once

// Colourings with short monochromatic paths.

#include <vector>

#include "monopath/core.hpp"

namespace monopath {

struct BlockStructure {
  std::vector<VertexList> blocks;  // each listed in its transitive order
  VertexList leftover;
};

/// u->v red iff u < v: both colour classes are acyclic.
EdgeColouring index_colouring(const Tournament& t);

struct BlockedColouring {
  Tournament tournament;
  EdgeColouring colouring;
  BlockStructure blocks;
};

/// Transitive tournament cut into consecutive blocks of size ceil(sqrt n);
/// blue inside blocks, red between.
BlockedColouring blocked_transitive_colouring(int n);

struct SublogColouring {
  EdgeColouring colouring;
  BlockStructure blocks;
};

/// Disjoint transitive blocks of order ceil(log2(n)/2), blocked colouring
/// inside each, blue forward / red backward between blocks, red out of and
/// blue into the leftover. Needs n >= 4.
SublogColouring sublog_colouring(const Tournament& t);

/// (2n/log2 n) * ceil(sqrt(log2(n)/2)) + ceil(sqrt n) + 1
double sublog_bound(int n);

/// ceil(sqrt(n)) without floating error.
int ceil_sqrt(int n);

}  // namespace monopath
