#include "monopath/colourings.hpp"

#include <cmath>

#include "monopath/generators.hpp"
#include "monopath/primitives.hpp"

namespace monopath {

int ceil_sqrt(int n) {
  int r = 0;
  while (r * r < n) ++r;
  return r;
}

EdgeColouring index_colouring(const Tournament& t) {
  EdgeColouring col(t, 2);
  const int n = t.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.beats(u, v))
        col.set(u, v, kRed);
      else
        col.set(v, u, kBlue);
    }
  return col;
}

namespace {

// Blue inside consecutive groups of `width` along `order`, red between.
// `order` must be transitive in t.
void colour_blocked(EdgeColouring& col, const VertexList& order, int width) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      col.set(order[i], order[j], i / width == j / width ? kBlue : kRed);
}

}  // namespace

BlockedColouring blocked_transitive_colouring(int n) {
  if (n < 1) throw PreconditionError("blocked_transitive_colouring needs n >= 1");
  BlockedColouring r{transitive_tournament(n), {}, {}};
  r.colouring = EdgeColouring(r.tournament, 2);
  const int w = ceil_sqrt(n);
  VertexList all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  colour_blocked(r.colouring, all, w);
  for (Vertex v = 0; v < n; ++v) {
    if (v % w == 0) r.blocks.blocks.emplace_back();
    r.blocks.blocks.back().push_back(v);
  }
  return r;
}

SublogColouring sublog_colouring(const Tournament& t) {
  const int n = t.order();
  if (n < 4) throw PreconditionError("sublog_colouring needs n >= 4");
  const int q = std::max(1, static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / 2.0 - 1e-12)));
  SublogColouring r{EdgeColouring(t, 2), {}};
  std::vector<int> block_of(n, -1);
  VertexList rest(n);
  for (Vertex v = 0; v < n; ++v) rest[v] = v;
  while (static_cast<long>(rest.size()) * static_cast<long>(rest.size()) >= n &&
         static_cast<int>(rest.size()) >= q) {
    VertexList seq = extract_transitive(t, rest);
    if (static_cast<int>(seq.size()) < q) break;
    seq.resize(q);
    const int id = static_cast<int>(r.blocks.blocks.size());
    for (Vertex v : seq) block_of[v] = id;
    r.blocks.blocks.push_back(seq);
    VertexList next;
    for (Vertex v : rest)
      if (block_of[v] < 0) next.push_back(v);
    rest = std::move(next);
  }
  r.blocks.leftover = rest;

  const int inner = ceil_sqrt(q);
  for (const auto& b : r.blocks.blocks) colour_blocked(r.colouring, b, inner);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !t.beats(u, v)) continue;
      const int bu = block_of[u], bv = block_of[v];
      if (bu >= 0 && bu == bv) continue;
      Colour c;
      if (bu < 0 && bv < 0)
        c = kRed;
      else if (bu < 0)
        c = kRed;  // leaving the leftover
      else if (bv < 0)
        c = kBlue;  // entering it
      else
        c = bu < bv ? kBlue : kRed;
      r.colouring.set(u, v, c);
    }
  return r;
}

double sublog_bound(int n) {
  const double lg = std::log2(static_cast<double>(n));
  return 2.0 * n / lg * std::ceil(std::sqrt(lg / 2.0) - 1e-12) + ceil_sqrt(n) + 1;
}

}  // namespace monopath
