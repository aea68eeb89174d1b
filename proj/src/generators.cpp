#include "monopath/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monopath {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamTournament = 1;
constexpr std::uint64_t kStreamColouring = 2;
constexpr std::uint64_t kStreamDigraph = 3;
constexpr std::uint64_t kStreamSampling = 4;

std::uint64_t pair_index(int n, Vertex u, Vertex v) {
  // lexicographic index of u < v
  const auto uu = static_cast<std::uint64_t>(u);
  return uu * static_cast<std::uint64_t>(n) - uu * (uu + 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t stream_word(Seed seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(seed ^ mix64(stream)) + index * kGolden);
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // rejection sampling removes modulo bias
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

Tournament random_tournament(int n, Seed seed) {
  if (n < 1) throw PreconditionError("random_tournament needs n >= 1");
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (stream_word(seed, kStreamTournament, pair_index(n, u, v)) & 1u)
        d.add_edge(u, v);
      else
        d.add_edge(v, u);
    }
  return Tournament(std::move(d));
}

Tournament transitive_tournament(int n) {
  if (n < 1) throw PreconditionError("transitive_tournament needs n >= 1");
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) d.add_edge(u, v);
  return Tournament(std::move(d));
}

EdgeColouring random_colouring(const Tournament& t, int k, Seed seed) {
  if (k < 2) throw PreconditionError("random_colouring needs k >= 2");
  EdgeColouring col(t, k);
  const int n = t.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t w = stream_word(seed, kStreamColouring, pair_index(n, u, v));
      const auto c = static_cast<Colour>(((w >> 32) * static_cast<std::uint64_t>(k)) >> 32);
      if (t.beats(u, v))
        col.set(u, v, c);
      else
        col.set(v, u, c);
    }
  return col;
}

Digraph random_oriented_graph(int n, double p, Seed seed) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t w = stream_word(seed, kStreamDigraph, pair_index(n, u, v));
      const double x = static_cast<double>(w >> 11) * 0x1.0p-53;
      if (x >= p) continue;
      if (w & 1u)
        d.add_edge(u, v);
      else
        d.add_edge(v, u);
    }
  return d;
}

double sigma_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2)");
  const double delta = 0.5 - epsilon;
  return 2.0 / (delta * delta);
}

std::uint64_t exact_pair_count(int n, int k0) {
  if (2 * k0 > n) return 0;
  auto binom = [](int a, int b) -> long double {
    long double r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const long double total = binom(n, k0) * binom(n - k0, k0);
  if (total >= 1.8e19L) return ~std::uint64_t{0};
  return static_cast<std::uint64_t>(std::llround(static_cast<double>(total)));
}

PseudorandomReport check_pseudorandom_exact(const Tournament& t, const PseudorandomParams& p,
                                            std::uint64_t budget) {
  p.validate();
  const int n = t.order();
  const int k = p.k0;
  PseudorandomReport report;
  if (2 * k > n) return report;
  const std::uint64_t pairs = exact_pair_count(n, k);
  if (pairs > budget)
    throw BudgetExceeded("too large for exact check: " + std::to_string(pairs) + " set pairs exceed budget " +
                         std::to_string(budget));
  const long required = required_edges(p.epsilon, k, k);

  std::vector<int> a_idx(k);
  std::iota(a_idx.begin(), a_idx.end(), 0);
  std::vector<long> from_a(n);
  std::vector<Vertex> rest;
  std::vector<int> b_idx(k);
  while (true) {
    VertexBits a_bits(n);
    VertexList A;
    for (int i : a_idx) {
      A.push_back(n - 1 - i);
      a_bits.set(n - 1 - i);
    }
    std::sort(A.begin(), A.end());
    rest.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!a_bits.test(v)) {
        rest.push_back(v);
        from_a[v] = t.digraph().in(v).count_and(a_bits);
      }
    const int m = static_cast<int>(rest.size());
    std::iota(b_idx.begin(), b_idx.end(), 0);
    while (true) {
      ++report.pairs_examined;
      long e = 0;
      for (int i : b_idx) e += from_a[rest[i]];
      if (e < required) {
        ViolationWitness w;
        w.A = A;
        for (int i : b_idx) w.B.push_back(rest[i]);
        w.observed = e;
        w.required = required;
        w.epsilon = p.epsilon;
        report.ok = false;
        report.witness = std::move(w);
        return report;
      }
      int i = k - 1;
      while (i >= 0 && b_idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++b_idx[i];
      for (int j = i + 1; j < k; ++j) b_idx[j] = b_idx[j - 1] + 1;
    }
    int i = k - 1;
    while (i >= 0 && a_idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++a_idx[i];
    for (int j = i + 1; j < k; ++j) a_idx[j] = a_idx[j - 1] + 1;
  }
  return report;
}

namespace {

// k0 vertices outside `exclude` minimising score, ties by id.
VertexList lowest_scoring(int n, int k, const VertexBits& exclude, const std::vector<int>& score) {
  VertexList cand;
  for (Vertex v = 0; v < n; ++v)
    if (!exclude.test(v)) cand.push_back(v);
  std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return score[a] < score[b]; });
  cand.resize(k);
  std::sort(cand.begin(), cand.end());
  return cand;
}

}  // namespace

PseudorandomReport check_pseudorandom_sampled(const Tournament& t, const PseudorandomParams& p, int trials,
                                              Seed seed, int refine_rounds) {
  p.validate();
  if (trials < 1) throw PreconditionError("trials must be at least 1");
  const int n = t.order();
  const int k = p.k0;
  if (2 * k > n) throw PreconditionError("2*k0 exceeds the vertex count");
  const Digraph& d = t.digraph();
  const long required = required_edges(p.epsilon, k, k);

  PseudorandomReport report;
  std::vector<Vertex> perm(n);
  std::vector<int> score(n);
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(stream_word(seed, kStreamSampling, static_cast<std::uint64_t>(trial)));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 2 * k; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(perm[i], perm[j]);
    }
    VertexList A(perm.begin(), perm.begin() + k);
    VertexList B(perm.begin() + k, perm.begin() + 2 * k);
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());

    auto test = [&](const VertexList& a, const VertexList& b) {
      ++report.pairs_examined;
      const long e = count_edges(d, a, b);
      if (e >= required) return false;
      report.ok = false;
      report.witness = ViolationWitness{a, b, e, required, p.epsilon};
      return true;
    };

    if (test(A, B)) return report;
    for (int round = 0; round < refine_rounds; ++round) {
      VertexBits b_bits = VertexBits::from_list(n, B);
      for (Vertex v = 0; v < n; ++v) score[v] = d.out(v).count_and(b_bits);
      A = lowest_scoring(n, k, b_bits, score);
      if (test(A, B)) return report;
      VertexBits a_bits = VertexBits::from_list(n, A);
      for (Vertex v = 0; v < n; ++v) score[v] = d.in(v).count_and(a_bits);
      B = lowest_scoring(n, k, a_bits, score);
      if (test(A, B)) return report;
    }
  }
  return report;
}

}  // namespace monopath
