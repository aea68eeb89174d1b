#pragma once

// Independent reference implementations for test assertions. Nothing here
// calls into the library beyond the plain data types.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "monopath/core.hpp"

namespace testing_support {

using namespace monopath;

inline Digraph make_digraph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph d(n);
  for (auto [u, v] : edges) d.add_edge(u, v);
  return d;
}

inline Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
  return d;
}

inline Tournament cyclic_triangle() { return Tournament(directed_cycle(3)); }

// Per-pair recount of e(A, B).
inline long brute_count(const Digraph& d, const VertexList& A, const VertexList& B) {
  long c = 0;
  for (Vertex a : A)
    for (Vertex b : B)
      if (d.has_edge(a, b)) ++c;
  return c;
}

// Longest simple path (vertex count) by plain backtracking over the
// predicate-defined edge relation.
inline int brute_longest_path(int n, const std::function<bool(int, int)>& edge) {
  int best = n > 0 ? 1 : 0;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> go = [&](int v, int len) {
    best = std::max(best, len);
    for (int w = 0; w < n; ++w)
      if (!used[w] && edge(v, w)) {
        used[w] = 1;
        go(w, len + 1);
        used[w] = 0;
      }
  };
  for (int v = 0; v < n; ++v) {
    used[v] = 1;
    go(v, 1);
    used[v] = 0;
  }
  return best;
}

inline int brute_longest_path(const Digraph& d) {
  return brute_longest_path(d.order(), [&](int u, int v) { return d.has_edge(u, v); });
}

inline int brute_longest_mono(const EdgeColouring& col) {
  int best = 0;
  for (Colour c = 0; c < col.colours(); ++c)
    best = std::max(best, brute_longest_path(col.order(), [&](int u, int v) {
                      return col.tournament().beats(u, v) && col.colour(u, v) == c;
                    }));
  return best;
}

// Kahn's algorithm.
inline bool is_acyclic(const Digraph& d) {
  const int n = d.order();
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
  std::vector<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    ++seen;
    for (int w = 0; w < n; ++w)
      if (d.has_edge(v, w) && --indeg[w] == 0) q.push_back(w);
  }
  return seen == n;
}

inline bool brute_path_ok(const Digraph& d, const VertexList& p) {
  std::set<int> s(p.begin(), p.end());
  if (s.size() != p.size()) return false;
  for (int v : p)
    if (v < 0 || v >= d.order()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!d.has_edge(p[i], p[i + 1])) return false;
  return true;
}

inline bool brute_cycle_ok(const Digraph& d, const VertexList& c) {
  if (c.size() < 2 || !brute_path_ok(d, c)) return false;
  return d.has_edge(c.back(), c.front());
}

inline bool brute_mono_path(const EdgeColouring& col, const VertexList& p, Colour c) {
  std::set<int> s(p.begin(), p.end());
  if (s.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!col.tournament().beats(p[i], p[i + 1])) return false;
    if (col.colour(p[i], p[i + 1]) != c) return false;
  }
  return true;
}

// The tournament on n vertices whose pair (i<j) is oriented i->j iff bit
// number (pair index) of `mask` is 0.
inline Tournament tournament_from_mask(int n, unsigned mask) {
  Digraph d(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) {
      if ((mask >> idx) & 1u)
        d.add_edge(j, i);
      else
        d.add_edge(i, j);
    }
  return Tournament(d);
}

inline EdgeColouring colouring_from_mask(const Tournament& t, unsigned mask) {
  EdgeColouring col(t, 2);
  int idx = 0;
  const int n = t.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) {
      const Colour c = ((mask >> idx) & 1u) ? kBlue : kRed;
      if (t.beats(i, j))
        col.set(i, j, c);
      else
        col.set(j, i, c);
    }
  return col;
}

// Greedy-free exact chromatic number by trying every assignment with k colours.
inline int brute_chromatic(const Digraph& d) {
  const int n = d.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int x = 0; x < k; ++x) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          if ((d.has_edge(u, v) || d.has_edge(v, u)) && c[u] == x) ok = false;
        if (!ok) continue;
        c[v] = x;
        if (go(v + 1)) return true;
      }
      return false;
    };
    if (go(0)) return k;
  }
  return n;
}

}  // namespace testing_support
