#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "monopath/colourings.hpp"
#include "monopath/generators.hpp"
#include "monopath/oracle.hpp"

using namespace monopath;
using namespace testing_support;

TEST_CASE("ceil_sqrt") {
  for (int n = 0; n <= 2000; ++n) {
    const int r = ceil_sqrt(n);
    CHECK(r * r >= n);
    if (r > 0) CHECK((r - 1) * (r - 1) < n);
  }
}

TEST_CASE("index colouring") {
  const EdgeColouring tr = index_colouring(transitive_tournament(6));
  for (auto [u, v] : tr.tournament().digraph().edges()) CHECK(tr.colour(u, v) == kRed);

  const EdgeColouring tri = index_colouring(cyclic_triangle());
  CHECK(tri.colour(0, 1) == kRed);
  CHECK(tri.colour(1, 2) == kRed);
  CHECK(tri.colour(2, 0) == kBlue);
  CHECK(is_acyclic(colour_class(tri, kRed)));
  CHECK(is_acyclic(colour_class(tri, kBlue)));

  for (Seed s = 0; s < 20; ++s) {
    const EdgeColouring col = index_colouring(random_tournament(8 + s, s + 3));
    CHECK(is_acyclic(colour_class(col, kRed)));
    CHECK(is_acyclic(colour_class(col, kBlue)));
  }
}

TEST_CASE("blocked transitive colouring") {
  const auto one = blocked_transitive_colouring(1);
  CHECK(one.tournament.order() == 1);
  CHECK(longest_mono_order(one.colouring) == 1);

  const auto four = blocked_transitive_colouring(4);
  REQUIRE(four.blocks.blocks.size() == 2);
  CHECK(four.blocks.blocks[0] == VertexList{0, 1});
  CHECK(four.blocks.blocks[1] == VertexList{2, 3});
  CHECK(brute_longest_mono(four.colouring) == 2);

  CHECK(brute_longest_mono(blocked_transitive_colouring(16).colouring) == 4);
  for (int n = 2; n <= 12; ++n)
    CHECK(brute_longest_mono(blocked_transitive_colouring(n).colouring) == ceil_sqrt(n));
}

TEST_CASE("sublog colouring structure") {
  const auto small = sublog_colouring(random_tournament(4, 0));
  for (const auto& b : small.blocks.blocks) CHECK(b.size() == 1);
  for (auto [u, v] : small.colouring.tournament().digraph().edges()) {
    const Colour c = small.colouring.colour(u, v);
    CHECK((c == kRed || c == kBlue));
  }

  const Tournament t = random_tournament(16, 0);
  const auto s = sublog_colouring(t);
  const EdgeColouring& col = s.colouring;
  std::vector<int> block_of(16, -1), pos(16, -1);
  for (std::size_t b = 0; b < s.blocks.blocks.size(); ++b) {
    const VertexList& blk = s.blocks.blocks[b];
    CHECK(blk.size() == 2);
    for (std::size_t i = 0; i < blk.size(); ++i) {
      block_of[blk[i]] = static_cast<int>(b);
      pos[blk[i]] = static_cast<int>(i);
      for (std::size_t j = i + 1; j < blk.size(); ++j) CHECK(t.beats(blk[i], blk[j]));
    }
  }
  const int w = ceil_sqrt(2);
  for (auto [u, v] : t.digraph().edges()) {
    const int bu = block_of[u], bv = block_of[v];
    const Colour c = col.colour(u, v);
    if (bu < 0 && bv < 0) {
      CHECK(c == kRed);
    } else if (bu < 0) {
      CHECK(c == kRed);
    } else if (bv < 0) {
      CHECK(c == kBlue);
    } else if (bu == bv) {
      CHECK(c == (pos[u] / w == pos[v] / w ? kBlue : kRed));
    } else {
      CHECK(c == (bu < bv ? kBlue : kRed));
    }
  }
  std::vector<int> seen(16, 0);
  for (const auto& b : s.blocks.blocks)
    for (Vertex v : b) ++seen[v];
  for (Vertex v : s.blocks.leftover) ++seen[v];
  for (int v = 0; v < 16; ++v) CHECK(seen[v] == 1);
}

TEST_CASE("sublog colouring stays under its bound") {
  CHECK(sublog_bound(16) == doctest::Approx(2.0 * 16 / 4 * 2 + 4 + 1));
  const Tournament t = random_tournament(18, 1);
  const EdgeColouring col = sublog_colouring(t).colouring;
  CHECK(longest_mono_order(col) <= sublog_bound(18));
  CHECK_THROWS_AS(sublog_colouring(random_tournament(3, 1)), PreconditionError);
}
