#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "monopath/generators.hpp"
#include "monopath/oracle.hpp"
#include "monopath/primitives.hpp"

using namespace monopath;
using namespace testing_support;

namespace {

// Every cycle through vertices of `d`, by DFS from its smallest vertex.
int brute_longest_cycle(const Digraph& d) {
  const int n = d.order();
  int best = 0;
  std::vector<char> used(n, 0);
  std::function<void(int, int, int)> go = [&](int s, int v, int len) {
    if (d.has_edge(v, s)) best = std::max(best, len);
    for (int w = s + 1; w < n; ++w)
      if (!used[w] && d.has_edge(v, w)) {
        used[w] = 1;
        go(s, w, len + 1);
        used[w] = 0;
      }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    go(s, s, 1);
    used[s] = 0;
  }
  return best;
}

void check_dfs_partition(const Digraph& d, const DfsPartition& p) {
  const int n = d.order();
  CHECK(brute_path_ok(d, p.path.vertices));
  CHECK(p.U.size() == p.W.size());
  std::vector<int> where(n, 0);
  for (Vertex v : p.path.vertices) ++where[v];
  for (Vertex v : p.U) ++where[v];
  for (Vertex v : p.W) ++where[v];
  for (int v = 0; v < n; ++v) CHECK(where[v] == 1);
  for (Vertex u : p.U)
    for (Vertex w : p.W) CHECK_FALSE(d.has_edge(u, w));
}

void check_alternating(const Digraph& d, const VertexList& A, const VertexList& B, double eps,
                       const CycleOrWitness& r) {
  const std::set<int> a(A.begin(), A.end()), b(B.begin(), B.end());
  const int m = static_cast<int>(A.size());
  if (auto* c = std::get_if<VertexCycle>(&r)) {
    CHECK(brute_cycle_ok(d, c->vertices));
    CHECK(c->length() >= alternating_cycle_target(eps, m));
    for (int i = 0; i < c->length(); ++i) {
      const int u = c->vertices[i], v = c->vertices[(i + 1) % c->length()];
      CHECK(((a.count(u) && b.count(v)) || (b.count(u) && a.count(v))));
    }
  } else {
    const auto& w = std::get<ViolationWitness>(r);
    std::set<int> all(A.begin(), A.end());
    all.insert(B.begin(), B.end());
    for (Vertex v : w.A) CHECK(all.count(v));
    for (Vertex v : w.B) CHECK(all.count(v));
    std::set<int> wa(w.A.begin(), w.A.end());
    for (Vertex v : w.B) CHECK_FALSE(wa.count(v));
    CHECK(w.observed == brute_count(d, w.A, w.B));
    CHECK(w.observed < w.required);
  }
}

}  // namespace

TEST_CASE("front_extend_cycle") {
  CHECK(front_extend_cycle(directed_cycle(3), 1).length() == 3);
  Digraph back(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) back.add_edge(j, i);
  CHECK_THROWS_AS(front_extend_cycle(back, 1), PreconditionError);

  // random tournament restricted to vertices of in-degree >= 3 inside the restriction
  const Tournament t = random_tournament(9, 2);
  VertexBits span(9);
  for (int v = 0; v < 9; ++v) span.set(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = span.first(); v >= 0; v = span.next(v + 1))
      if (t.digraph().in(v).count_and(span) < 3) {
        span.reset(v);
        changed = true;
      }
  }
  if (span.count() > 0) {
    const VertexCycle c = front_extend_cycle(t.digraph(), span, 3);
    CHECK(brute_cycle_ok(t.digraph(), c.vertices));
    CHECK(c.length() >= 4);
    for (Vertex v : c.vertices) CHECK(span.test(v));
    const InducedSubgraph sub = induced(t.digraph(), span.to_list());
    CHECK(brute_longest_cycle(sub.graph) >= c.length());
  }
}

TEST_CASE("front_extend_cycle on random dense digraphs") {
  int exercised = 0;
  for (Seed s = 0; s < 300; ++s) {
    const Digraph d = random_oriented_graph(12, 0.7, s);
    int k = d.order();
    for (int v = 0; v < d.order(); ++v) k = std::min(k, d.in_degree(v));
    if (k < 1) continue;
    ++exercised;
    const VertexCycle c = front_extend_cycle(d, k);
    CHECK(brute_cycle_ok(d, c.vertices));
    CHECK(c.length() >= k + 1);
  }
  CHECK(exercised > 20);
}

TEST_CASE("dfs_partition hand-executed cases") {
  const auto one = dfs_partition(Digraph(1));
  CHECK(one.path.vertices == VertexList{0});
  CHECK(one.U.empty());
  CHECK(one.W.empty());

  const auto two = dfs_partition(Digraph(2));
  CHECK(two.path.empty());
  CHECK(two.U == VertexList{0});
  CHECK(two.W == VertexList{1});

  const auto tr = dfs_partition(transitive_tournament(3).digraph());
  CHECK(tr.path.vertices == VertexList{0, 1, 2});
  CHECK(tr.U.empty());
  CHECK(tr.W.empty());
}

TEST_CASE("dfs_partition invariants on random digraphs") {
  for (Seed s = 0; s < 200; ++s) {
    const Digraph d = random_oriented_graph(5 + s % 20, (s % 10) / 10.0, s);
    check_dfs_partition(d, dfs_partition(d));
  }
}

TEST_CASE("alternating_cycle") {
  Digraph full(4);
  for (int a : {0, 1})
    for (int b : {2, 3}) {
      full.add_edge(a, b);
      full.add_edge(b, a);
    }
  const auto r = alternating_cycle(full, VertexList{0, 1}, VertexList{2, 3}, 1.0);
  REQUIRE(std::holds_alternative<VertexCycle>(r));
  CHECK(std::get<VertexCycle>(r).length() == 4);
  check_alternating(full, {0, 1}, {2, 3}, 1.0, r);

  Digraph one_way(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) one_way.add_edge(a, b);
  const auto w = alternating_cycle(one_way, VertexList{0, 1, 2, 3}, VertexList{4, 5, 6, 7}, 0.5);
  REQUIRE(std::holds_alternative<ViolationWitness>(w));
  CHECK(std::get<ViolationWitness>(w).A == VertexList{4, 5, 6, 7});
  CHECK(std::get<ViolationWitness>(w).observed == 0);
  CHECK(std::get<ViolationWitness>(w).required == 8);
}

TEST_CASE("alternating_cycle on random bipartite instances") {
  const int m = 40;
  VertexList A, B;
  for (int i = 0; i < m; ++i) {
    A.push_back(i);
    B.push_back(m + i);
  }
  for (Seed s = 0; s < 50; ++s) {
    SplitMix64 rng(s);
    Digraph d(2 * m);
    for (int a : A)
      for (int b : B) {
        if (rng.uniform01() < 0.75) d.add_edge(a, b);
        if (rng.uniform01() < 0.75) d.add_edge(b, a);
      }
    const auto r = alternating_cycle(d, A, B, 0.25);
    CHECK(std::holds_alternative<VertexCycle>(r));
    check_alternating(d, A, B, 0.25, r);
  }
  for (Seed s = 0; s < 200; ++s) {
    SplitMix64 rng(1000 + s);
    const int mm = 3 + s % 10;
    const double p = rng.uniform01();
    VertexList AA, BB;
    for (int i = 0; i < mm; ++i) {
      AA.push_back(i);
      BB.push_back(mm + i);
    }
    Digraph d(2 * mm);
    for (int a : AA)
      for (int b : BB) {
        if (rng.uniform01() < p) d.add_edge(a, b);
        if (rng.uniform01() < p) d.add_edge(b, a);
      }
    check_alternating(d, AA, BB, 0.3, alternating_cycle(d, AA, BB, 0.3));
  }
}

TEST_CASE("ghrv_path") {
  const auto tri = ghrv_path(directed_cycle(3));
  CHECK(tri.acyclic_subgraph.edge_count() == 2);
  CHECK(tri.longest_path.order() == 3);

  const auto k5 = ghrv_path(transitive_tournament(5).digraph());
  CHECK(k5.longest_path.vertices == VertexList{0, 1, 2, 3, 4});

  const Digraph d = random_oriented_graph(9, 0.5, 4);
  const auto g = ghrv_path(d);
  CHECK(brute_path_ok(d, g.longest_path.vertices));
  CHECK(g.longest_path.order() >= brute_chromatic(d));
}

TEST_CASE("ghrv certificate structure") {
  for (Seed s = 0; s < 100; ++s) {
    const Digraph d = random_oriented_graph(10, 0.4, s);
    const auto g = ghrv_path(d);
    CHECK(is_acyclic(g.acyclic_subgraph));
    int top = 0;
    for (auto [u, v] : g.acyclic_subgraph.edges()) {
      CHECK(d.has_edge(u, v));
      CHECK(g.levels[v] > g.levels[u]);
    }
    for (int v = 0; v < d.order(); ++v) top = std::max(top, g.levels[v]);
    CHECK(g.longest_path.order() == top + 1);
    CHECK(brute_path_ok(d, g.longest_path.vertices));
    // levels are a proper colouring of the underlying graph
    for (auto [u, v] : d.edges()) CHECK(g.levels[u] != g.levels[v]);
  }
}

TEST_CASE("asym_paths") {
  const Tournament t = transitive_tournament(5);
  const auto red = asym_paths(EdgeColouring(t, 2, kRed), 5, 2);
  CHECK(red.first == kRed);
  CHECK(red.second.order() == 5);
  const auto blue = asym_paths(EdgeColouring(t, 2, kBlue), 2, 5);
  CHECK(blue.first == kBlue);
  CHECK(blue.second.order() == 5);
  CHECK_THROWS_AS(asym_paths(EdgeColouring(t, 2, kRed), 3, 4), PreconditionError);

  const EdgeColouring col = random_colouring(random_tournament(10, 1), 2, 1);
  const auto [c, p] = asym_paths(col, 4, 4);
  CHECK(brute_mono_path(col, p.vertices, c));
  CHECK(p.order() >= 4);
  CHECK(longest_mono_dirpath_exact(col)[c].value >= p.order());
}

TEST_CASE("asym_paths on random colourings") {
  for (Seed s = 0; s < 200; ++s) {
    const int x = 2 + s % 4, y = 2 + (s / 4) % 4;
    const int n = (x - 1) * (y - 1) + 1 + s % 3;
    const EdgeColouring col = random_colouring(random_tournament(n, s), 2, s + 7);
    const auto [c, p] = asym_paths(col, x, y);
    CHECK(brute_mono_path(col, p.vertices, c));
    CHECK(p.order() >= (c == kRed ? x : y));
  }
}

TEST_CASE("raynaud_path") {
  const auto one = raynaud_path(CompleteDigraphColouring(1));
  CHECK(one.second.order() == 1);
  const auto red = raynaud_path(CompleteDigraphColouring(6, kRed));
  CHECK(red.first == kRed);
  CHECK(red.second.order() == 6);

  for (Seed s = 0; s < 2000; ++s) {
    const int n = 2 + s % 12;
    SplitMix64 rng(s);
    CompleteDigraphColouring h(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) h.set(u, v, static_cast<Colour>(rng.below(2)));
    const RaynaudResult r = raynaud_partition(h);
    const Digraph cls = colour_class(h, r.colour);
    REQUIRE(brute_path_ok(cls, r.path.vertices));
    CHECK(2 * r.path.order() >= n);
    CHECK(brute_path_ok(colour_class(h, kRed), r.red.vertices));
    CHECK(brute_path_ok(colour_class(h, kBlue), r.blue.vertices));
    CHECK(r.red.order() + r.blue.order() == n);
  }
}

TEST_CASE("join_cycle_paths") {
  const auto single = join_cycle_paths(directed_cycle(5), {VertexCycle{{0, 1, 2, 3, 4}}});
  CHECK(single.order() == 5);

  Digraph two(6);
  for (int i = 0; i < 3; ++i) {
    two.add_edge(i, (i + 1) % 3);
    two.add_edge(3 + i, 3 + (i + 1) % 3);
    for (int j = 3; j < 6; ++j) two.add_edge(i, j);
  }
  const auto p2 = join_cycle_paths(two, {VertexCycle{{0, 1, 2}}, VertexCycle{{3, 4, 5}}});
  CHECK(brute_path_ok(two, p2.vertices));
  CHECK(p2.length() >= 3);

  Digraph chain(12);
  std::vector<VertexCycle> cycles;
  for (int c = 0; c < 3; ++c) {
    VertexCycle cyc;
    for (int i = 0; i < 4; ++i) {
      chain.add_edge(4 * c + i, 4 * c + (i + 1) % 4);
      cyc.vertices.push_back(4 * c + i);
      if (c < 2) chain.add_edge(4 * c + i, 4 * (c + 1) + i);
    }
    cycles.push_back(cyc);
  }
  const auto p3 = join_cycle_paths(chain, cycles);
  CHECK(brute_path_ok(chain, p3.vertices));
  CHECK(p3.length() >= 8);

  Digraph apart = directed_cycle(3);
  CHECK_THROWS_AS(join_cycle_paths(two, {VertexCycle{{3, 4, 5}}, VertexCycle{{0, 1, 2}}}), PreconditionError);
  CHECK_THROWS_AS(join_cycle_paths(apart, {VertexCycle{{0, 2, 1}}}), PreconditionError);
}

TEST_CASE("join_cycle_paths on random chains") {
  for (Seed s = 0; s < 200; ++s) {
    SplitMix64 rng(s);
    const int k = 2 + s % 4, len = 3 + s % 5;
    const int n = k * len;
    Digraph d(n);
    std::vector<VertexCycle> cycles(k);
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < len; ++i) {
        cycles[c].vertices.push_back(c * len + i);
        d.add_edge(c * len + i, c * len + (i + 1) % len);
      }
    for (int c = 0; c + 1 < k; ++c) {
      d.add_edge(c * len + static_cast<int>(rng.below(len)), (c + 1) * len + static_cast<int>(rng.below(len)));
      for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j)
          if (rng.uniform01() < 0.2 && !d.has_edge(c * len + i, (c + 1) * len + j))
            d.add_edge(c * len + i, (c + 1) * len + j);
    }
    const auto p = join_cycle_paths(d, cycles);
    CHECK(brute_path_ok(d, p.vertices));
    CHECK(p.order() >= len + k - 1);  // the last cycle is walked in full
  }
}

TEST_CASE("low_indegree_order") {
  const Digraph dag = transitive_tournament(6).digraph();
  const auto o = low_indegree_order(dag, 0);
  REQUIRE(std::holds_alternative<Ordering>(o));
  const auto& ord = std::get<Ordering>(o);
  std::vector<int> pos(6);
  for (int i = 0; i < 6; ++i) pos[ord[i]] = i;
  for (auto [u, v] : dag.edges()) CHECK(pos[u] < pos[v]);

  const auto c = low_indegree_order(directed_cycle(3), 0);
  REQUIRE(std::holds_alternative<VertexCycle>(c));
  CHECK(std::get<VertexCycle>(c).length() >= 2);
}

TEST_CASE("low_indegree_order on random colour classes") {
  for (Seed s = 0; s < 300; ++s) {
    const int n = 6 + s % 10, t = s % 4;
    const EdgeColouring col = random_colouring(random_tournament(n, s), 2, s + 5);
    const Digraph d = colour_class(col, s % 2);
    const auto r = low_indegree_order(d, t);
    if (auto* ord = std::get_if<Ordering>(&r)) {
      REQUIRE(static_cast<int>(ord->size()) == n);
      std::vector<int> pos(n, -1);
      for (int i = 0; i < n; ++i) pos[(*ord)[i]] = i;
      for (int v = 0; v < n; ++v) {
        REQUIRE(pos[v] >= 0);
        int later = 0;
        for (int u = 0; u < n; ++u)
          if (d.has_edge(u, v) && pos[u] > pos[v]) ++later;
        CHECK(later <= t);
      }
    } else {
      const auto& cyc = std::get<VertexCycle>(r);
      CHECK(brute_cycle_ok(d, cyc.vertices));
      CHECK(cyc.length() >= t + 2);
    }
  }
}

TEST_CASE("min_deg_pair") {
  const Digraph t8 = transitive_tournament(8).digraph();
  const auto p = min_deg_pair(t8, 3.5);
  CHECK(p.mindeg >= 1);

  Digraph star(10);
  for (int v = 1; v < 10; ++v) star.add_edge(0, v);
  CHECK_THROWS_AS(min_deg_pair(star, 1.0), PreconditionError);

  const Digraph t40 = random_tournament(40, 9).digraph();
  const auto q = min_deg_pair(t40, 19.0);
  CHECK(q.mindeg >= 5);
}

TEST_CASE("min_deg_pair degrees are what it reports") {
  for (Seed s = 0; s < 200; ++s) {
    const int n = 8 + s % 30;
    const Digraph d = random_oriented_graph(n, 0.2 + (s % 7) / 10.0, s);
    const double dd = d.edge_count() / static_cast<double>(n);
    if (dd <= 0) continue;
    const auto p = min_deg_pair(d, dd);
    std::set<int> xs(p.X.begin(), p.X.end());
    for (Vertex y : p.Y) CHECK_FALSE(xs.count(y));
    int mind = n;
    for (Vertex x : p.X) mind = std::min<int>(mind, brute_count(d, {x}, p.Y));
    for (Vertex y : p.Y) mind = std::min<int>(mind, brute_count(d, p.X, {y}));
    CHECK(mind == p.mindeg);
    CHECK(p.mindeg >= std::ceil(dd / 4 - 1e-9));
  }
}

TEST_CASE("extract_transitive") {
  const Tournament t = random_tournament(16, 6);
  CHECK(extract_transitive(t, VertexList{3}) == VertexList{3});

  const auto check_chain = [](const Tournament& tt, const VertexList& S) {
    const VertexList q = extract_transitive(tt, S);
    CHECK(static_cast<int>(q.size()) >= static_cast<int>(std::floor(std::log2(S.size()))) + 1);
    std::set<int> in(S.begin(), S.end());
    for (std::size_t i = 0; i < q.size(); ++i) {
      CHECK(in.count(q[i]));
      for (std::size_t j = i + 1; j < q.size(); ++j) CHECK(tt.beats(q[i], q[j]));
    }
  };
  VertexList all8{0, 1, 2, 3, 4, 5, 6, 7};
  check_chain(transitive_tournament(8), all8);
  VertexList all16;
  for (int v = 0; v < 16; ++v) all16.push_back(v);
  check_chain(t, all16);
  for (Seed s = 0; s < 100; ++s) {
    const int n = 1 + s % 40;
    VertexList S;
    for (int v = 0; v < n; v += 1 + s % 2) S.push_back(v);
    check_chain(random_tournament(n, s), S);
  }
}
