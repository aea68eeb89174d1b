#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "monopath/generators.hpp"

using namespace monopath;
using namespace testing_support;

TEST_CASE("random tournaments are tournaments and reproducible") {
  const Tournament t = random_tournament(4, 99);
  CHECK(t.digraph().edge_count() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) CHECK(t.beats(u, v) != t.beats(v, u));
  CHECK(random_tournament(30, 5) == random_tournament(30, 5));
  CHECK_FALSE(random_tournament(30, 5) == random_tournament(30, 6));
}

TEST_CASE("random tournament orientation frequency is balanced per pair") {
  const int n = 10, seeds = 2000;
  std::vector<int> forward(n * n, 0);
  for (int s = 0; s < seeds; ++s) {
    const Tournament t = random_tournament(n, s);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) forward[i * n + j] += t.beats(i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double f = forward[i * n + j] / double(seeds);
      CHECK(f >= 0.45);
      CHECK(f <= 0.55);
    }
}

TEST_CASE("transitive tournaments") {
  const Tournament t2 = transitive_tournament(2);
  CHECK(t2.digraph().edges() == std::vector<std::pair<int, int>>{{0, 1}});
  const Tournament t5 = transitive_tournament(5);
  for (int v = 0; v < 5; ++v) CHECK(t5.digraph().out_degree(v) == 4 - v);
  const Tournament t6 = transitive_tournament(6);
  CHECK(is_acyclic(t6.digraph()));
  CHECK(brute_longest_path(t6.digraph()) == 6);  // unique topological order is a Hamilton path
}

TEST_CASE("random colourings") {
  const Tournament t4 = random_tournament(4, 1);
  const EdgeColouring c = random_colouring(t4, 2, 17);
  CHECK(c == random_colouring(t4, 2, 17));
  int total = 0;
  for (auto [u, v] : t4.digraph().edges()) {
    const Colour x = c.colour(u, v);
    CHECK((x == kRed || x == kBlue));
    ++total;
  }
  CHECK(total == 6);

  const Tournament t10 = random_tournament(10, 2);
  long red = 0, all = 0;
  for (int s = 0; s < 2000; ++s) {
    const EdgeColouring col = random_colouring(t10, 2, s);
    for (auto [u, v] : t10.digraph().edges()) {
      red += col.colour(u, v) == kRed;
      ++all;
    }
  }
  CHECK(red / double(all) >= 0.45);
  CHECK(red / double(all) <= 0.55);

  const EdgeColouring c3 = random_colouring(t10, 3, 4);
  std::vector<int> seen(3, 0);
  for (auto [u, v] : t10.digraph().edges()) {
    const Colour x = c3.colour(u, v);
    REQUIRE(x >= 0);
    REQUIRE(x < 3);
    seen[x] = 1;
  }
  CHECK(seen == std::vector<int>{1, 1, 1});
}

TEST_CASE("random oriented graphs have no antiparallel pairs") {
  const Digraph d = random_oriented_graph(20, 0.5, 3);
  CHECK(d.is_oriented());
  CHECK(d == random_oriented_graph(20, 0.5, 3));
  CHECK(random_oriented_graph(8, 1.0, 1).edge_count() == 28);
  CHECK(random_oriented_graph(8, 0.0, 1).edge_count() == 0);
}

TEST_CASE("sigma as a function of epsilon") {
  CHECK(sigma_for_epsilon(0.25) == doctest::Approx(32.0));
  CHECK(sigma_for_epsilon(0.4) == doctest::Approx(200.0));
  CHECK(sigma_for_epsilon(0.01) == doctest::Approx(2.0 / (0.49 * 0.49)));
  CHECK_THROWS_AS(sigma_for_epsilon(0.5), PreconditionError);
  CHECK_THROWS_AS(sigma_for_epsilon(0.0), PreconditionError);
}

TEST_CASE("exact pseudorandomness check") {
  const auto r = check_pseudorandom_exact(transitive_tournament(8), {0.25, 2});
  REQUIRE(r.witness);
  CHECK(r.witness->A == VertexList{6, 7});
  CHECK(r.witness->B == VertexList{0, 1});
  CHECK(r.witness->observed == 0);
  CHECK(r.witness->required == 1);

  CHECK(check_pseudorandom_exact(random_tournament(9, 1), {0.25, 5}).ok);  // 2*5 > 9
  CHECK(check_pseudorandom_exact(transitive_tournament(9), {0.25, 5}).ok);

  const Tournament t = random_tournament(12, 11);
  const auto rr = check_pseudorandom_exact(t, {0.05, 6});
  CHECK(rr.ok);
  CHECK(rr.pairs_examined == exact_pair_count(12, 6));
}

TEST_CASE("exact check matches a brute-force scan on small instances") {
  for (Seed s = 0; s < 30; ++s) {
    const Tournament t = random_tournament(8, s);
    const PseudorandomParams p{0.3, 2};
    // brute force: every pair of disjoint subsets of size >= 2
    bool violated = false;
    for (unsigned a = 1; a < 256 && !violated; ++a)
      for (unsigned b = 1; b < 256 && !violated; ++b) {
        if ((a & b) || std::popcount(a) < 2 || std::popcount(b) < 2) continue;
        VertexList A, B;
        for (int v = 0; v < 8; ++v) {
          if ((a >> v) & 1) A.push_back(v);
          if ((b >> v) & 1) B.push_back(v);
        }
        if (brute_count(t.digraph(), A, B) < required_edges(p.epsilon, A.size(), B.size())) violated = true;
      }
    const auto r = check_pseudorandom_exact(t, p);
    CHECK(r.ok == !violated);
    if (r.witness) CHECK(verify_witness(t, *r.witness, p.k0));
  }
}

TEST_CASE("exact check refuses oversized instances") {
  CHECK_THROWS_AS(check_pseudorandom_exact(random_tournament(60, 1), {0.25, 10}, 1000), BudgetExceeded);
}

TEST_CASE("sampled pseudorandomness check") {
  const auto tr = check_pseudorandom_sampled(transitive_tournament(100), {0.25, 10}, 10000, 1);
  REQUIRE(tr.witness);
  CHECK(verify_witness(transitive_tournament(100), *tr.witness, 10));
  CHECK(tr.witness->observed == brute_count(transitive_tournament(100).digraph(), tr.witness->A, tr.witness->B));

  const auto a = check_pseudorandom_sampled(random_tournament(60, 3), {0.25, 5}, 300, 9);
  const auto b = check_pseudorandom_sampled(random_tournament(60, 3), {0.25, 5}, 300, 9);
  CHECK(a.ok == b.ok);
  CHECK(a.pairs_examined == b.pairs_examined);
  CHECK_THROWS_AS(check_pseudorandom_sampled(random_tournament(10, 3), {0.25, 6}, 10, 1), PreconditionError);
}
