#include "monopath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace monopath {

namespace {

void require_size(int n, int limit, const char* what) {
  if (n > limit)
    throw PreconditionError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the exact limit " +
                            std::to_string(limit));
}

std::vector<std::uint32_t> out_masks(const Digraph& d) {
  std::vector<std::uint32_t> m(d.order(), 0);
  for (auto [u, v] : d.edges()) m[u] |= 1u << v;
  return m;
}

// ends[S] = set of last vertices of Hamilton paths on S. Returns the longest
// order found; stops early once `cutoff` is reached.
int subset_dp(const std::vector<std::uint32_t>& out, int cutoff, std::vector<std::uint32_t>* keep,
              std::uint64_t& work) {
  const int n = static_cast<int>(out.size());
  if (n == 0) return 0;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int i = 0; i < n; ++i) ends[std::size_t{1} << i] = 1u << i;
  int best = 1;
  for (std::uint32_t S = 1; S < (1u << n); ++S) {
    std::uint32_t e = ends[S];
    if (!e) continue;
    ++work;
    best = std::max(best, std::popcount(S));
    if (best >= cutoff) break;
    while (e) {
      const int i = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t nxt = out[i] & ~S;
      while (nxt) {
        const int j = std::countr_zero(nxt);
        nxt &= nxt - 1;
        ends[S | (1u << j)] |= 1u << j;
      }
    }
  }
  if (keep) *keep = std::move(ends);
  return best;
}

VertexPath rebuild(const std::vector<std::uint32_t>& out, const std::vector<std::uint32_t>& ends, int order) {
  const int n = static_cast<int>(out.size());
  std::uint32_t S = 0;
  for (std::uint32_t T = 1; T < (1u << n); ++T)
    if (ends[T] && std::popcount(T) == order) {
      S = T;
      break;
    }
  VertexPath p;
  int last = std::countr_zero(ends[S]);
  while (true) {
    p.vertices.push_back(last);
    const std::uint32_t rest = S & ~(1u << last);
    if (!rest) break;
    std::uint32_t cand = ends[rest];
    while (cand) {
      const int i = std::countr_zero(cand);
      cand &= cand - 1;
      if ((out[i] >> last) & 1u) {
        last = i;
        break;
      }
    }
    S = rest;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

ExactReport longest_path_exact(const Digraph& d) {
  require_size(d.order(), kLongestPathLimit, "longest_path_exact");
  ExactReport r;
  r.method = "subset DP over (vertex set, last vertex)";
  if (d.order() == 0) return r;
  const auto out = out_masks(d);
  std::vector<std::uint32_t> ends;
  r.value = subset_dp(out, d.order() + 1, &ends, r.work);
  r.witness = rebuild(out, ends, r.value);
  return r;
}

ExactReport longest_path_exact_dfs(const Digraph& d) {
  const int n = d.order();
  require_size(n, 16, "longest_path_exact_dfs");
  ExactReport r;
  r.method = "memoised DFS over (visited set, current vertex)";
  if (n == 0) return r;
  const auto out = out_masks(d);
  // memo[S * n + v] = 1 + longest extension (in vertices) from v with S visited; 0 = unknown
  std::vector<std::uint8_t> memo((std::size_t{1} << n) * n, 0);
  auto go = [&](auto&& self, std::uint32_t S, int v) -> int {
    auto& m = memo[static_cast<std::size_t>(S) * n + v];
    if (m) return m - 1;
    ++r.work;
    int best = 0;
    for (std::uint32_t nxt = out[v] & ~S; nxt; nxt &= nxt - 1) {
      const int w = std::countr_zero(nxt);
      best = std::max(best, 1 + self(self, S | (1u << w), w));
    }
    m = static_cast<std::uint8_t>(best + 1);
    return best;
  };
  int best_v = 0;
  for (int v = 0; v < n; ++v) {
    const int len = 1 + go(go, 1u << v, v);
    if (len > r.value) {
      r.value = len;
      best_v = v;
    }
  }
  VertexPath p{{best_v}};
  std::uint32_t S = 1u << best_v;
  int v = best_v;
  while (true) {
    const int remain = go(go, S, v);
    if (remain == 0) break;
    for (std::uint32_t nxt = out[v] & ~S; nxt; nxt &= nxt - 1) {
      const int w = std::countr_zero(nxt);
      if (1 + go(go, S | (1u << w), w) == remain) {
        v = w;
        S |= 1u << w;
        p.vertices.push_back(w);
        break;
      }
    }
  }
  r.witness = std::move(p);
  return r;
}

std::vector<ExactReport> longest_mono_dirpath_exact(const EdgeColouring& col) {
  require_size(col.order(), kLongestPathLimit, "longest_mono_dirpath_exact");
  std::vector<ExactReport> out;
  for (Colour c = 0; c < col.colours(); ++c) out.push_back(longest_path_exact(colour_class(col, c)));
  return out;
}

int longest_mono_order(const EdgeColouring& col) {
  int best = 0;
  for (const auto& r : longest_mono_dirpath_exact(col)) best = std::max(best, r.value);
  return best;
}

ExactReport m_of_T_exact(const Tournament& t) {
  const int n = t.order();
  require_size(n, kMOfTLimit, "m_of_T_exact");
  ExactReport r;
  r.method = "colouring enumeration, colour-swap and automorphism pruning, branch and bound";
  if (n <= 1) {
    r.value = n;
    r.witness = EdgeColouring(t, 2);
    return r;
  }
  const auto edges = t.digraph().edges();
  const int E = static_cast<int>(edges.size());
  std::vector<int> edge_id(n * n, -1);
  for (int i = 0; i < E; ++i) edge_id[edges[i].first * n + edges[i].second] = i;

  // automorphisms, as permutations of edge ids
  std::vector<std::vector<int>> autos;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!t.beats(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<int> em(E);
    bool identity = true;
    for (int i = 0; i < E; ++i) {
      em[i] = edge_id[perm[edges[i].first] * n + perm[edges[i].second]];
      identity &= em[i] == i;
    }
    if (!identity) autos.push_back(std::move(em));
  } while (std::next_permutation(perm.begin(), perm.end()));

  int best = n + 1;
  std::uint32_t best_mask = 0;
  std::vector<std::uint32_t> red(n), blue(n);
  // edge 0 is fixed red: swapping colours preserves the objective
  for (std::uint32_t mask = 0; mask < (1u << (E - 1)); ++mask) {
    const std::uint32_t full = mask << 1;  // bit i = 1 means edge i blue
    bool canonical = true;
    for (const auto& em : autos) {
      std::uint32_t img = 0;
      for (int i = 0; i < E; ++i)
        if ((full >> i) & 1u) img |= 1u << em[i];
      // the image or its colour swap may be the representative
      const std::uint32_t swapped = ~img & ((1u << E) - 1);
      const std::uint32_t rep = (img & 1u) ? swapped : img;
      if (rep < full) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::fill(red.begin(), red.end(), 0);
    std::fill(blue.begin(), blue.end(), 0);
    for (int i = 0; i < E; ++i) ((full >> i) & 1u ? blue : red)[edges[i].first] |= 1u << edges[i].second;
    const int lr = subset_dp(red, best, nullptr, r.work);
    if (lr >= best) continue;
    const int lb = subset_dp(blue, best, nullptr, r.work);
    if (lb >= best) continue;
    best = std::max(lr, lb);
    best_mask = full;
  }
  r.value = best;
  EdgeColouring w(t, 2);
  for (int i = 0; i < E; ++i) w.set(edges[i].first, edges[i].second, (best_mask >> i) & 1u ? kBlue : kRed);
  r.witness = std::move(w);
  return r;
}

ExactReport chromatic_number_exact(const Digraph& d) {
  const int n = d.order();
  require_size(n, kChromaticLimit, "chromatic_number_exact");
  ExactReport r;
  r.method = "backtracking k-colouring for increasing k";
  if (n == 0) {
    r.witness = std::vector<int>{};
    return r;
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : d.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // high-degree vertices first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
  std::vector<int> colour(n, -1);
  for (int k = 1; k <= n; ++k) {
    std::fill(colour.begin(), colour.end(), -1);
    auto go = [&](auto&& self, int idx, int used) -> bool {
      ++r.work;
      if (idx == n) return true;
      const int v = order[idx];
      // colours beyond used+1 are symmetric to used+1
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool clash = false;
        for (std::uint32_t nb = adj[v]; nb; nb &= nb - 1)
          if (colour[std::countr_zero(nb)] == c) {
            clash = true;
            break;
          }
        if (clash) continue;
        colour[v] = c;
        if (self(self, idx + 1, std::max(used, c + 1))) return true;
        colour[v] = -1;
      }
      return false;
    };
    if (go(go, 0, 0)) {
      r.value = k;
      r.witness = colour;
      return r;
    }
  }
  throw std::logic_error("chromatic_number_exact: no colouring found");
}

}  // namespace monopath
