#include "monopath/primitives.hpp"

#include <algorithm>
#include <string>

namespace monopath {

namespace {

VertexBits full_span(int n) {
  VertexBits b(n);
  for (Vertex v = 0; v < n; ++v) b.set(v);
  return b;
}

VertexBits masked(const VertexBits& row, const VertexBits& span) {
  VertexBits r = row;
  r &= span;
  return r;
}

}  // namespace

VertexCycle front_extend_cycle(const Digraph& d, int k) { return front_extend_cycle(d, full_span(d.order()), k); }

VertexCycle front_extend_cycle(const Digraph& d, const VertexBits& span, int k) {
  if (k < 1) throw PreconditionError("front_extend_cycle needs k >= 1");
  const Vertex start = span.first();
  if (start < 0) throw PreconditionError("front_extend_cycle on an empty vertex set");
  for (Vertex v = start; v >= 0; v = span.next(v + 1)) {
    const int deg = d.in(v).count_and(span);
    if (deg < k)
      throw PreconditionError("vertex " + std::to_string(v) + " has in-degree " + std::to_string(deg) + " < " +
                              std::to_string(k));
  }
  // rev holds the path back to front, so prepending is push_back.
  VertexList rev{start};
  std::vector<int> idx(d.order(), -1);
  idx[start] = 0;
  VertexBits on(d.order());
  on.set(start);
  while (true) {
    VertexBits cand = masked(d.in(rev.back()), span);
    cand.subtract(on);
    const Vertex u = cand.first();
    if (u < 0) break;
    idx[u] = static_cast<int>(rev.size());
    rev.push_back(u);
    on.set(u);
  }
  // the front's in-neighbours are all on the path: close at the one nearest the back
  const Vertex front = rev.back();
  int lo = static_cast<int>(rev.size());
  VertexBits ins = masked(d.in(front), span);
  for (Vertex w = ins.first(); w >= 0; w = ins.next(w + 1)) lo = std::min(lo, idx[w]);
  VertexCycle c;
  for (int i = static_cast<int>(rev.size()) - 1; i >= lo; --i) c.vertices.push_back(rev[i]);
  return c;
}

DfsPartition dfs_partition(const Digraph& d) { return dfs_partition(d, full_span(d.order())); }

DfsPartition dfs_partition(const Digraph& d, const VertexBits& span) {
  VertexBits W = span;
  VertexList U;
  VertexList path;
  int w_count = W.count();
  while (w_count != static_cast<int>(U.size())) {
    if (path.empty()) {
      const Vertex v = W.first();
      W.reset(v);
      --w_count;
      path.push_back(v);
      continue;
    }
    VertexBits out = masked(d.out(path.back()), W);
    const Vertex v = out.first();
    if (v >= 0) {
      W.reset(v);
      --w_count;
      path.push_back(v);
    } else {
      U.push_back(path.back());
      path.pop_back();
    }
  }
  DfsPartition r;
  r.path.vertices = std::move(path);
  std::sort(U.begin(), U.end());
  r.U = std::move(U);
  r.W = W.to_list();
  return r;
}

int alternating_cycle_target(double epsilon, int m) {
  int l = ceil_int(epsilon * m / 4.0);
  if (l % 2) ++l;
  return std::max(2, l);
}

CycleOrWitness alternating_cycle(const Digraph& d, std::span<const Vertex> A, std::span<const Vertex> B,
                                 double epsilon) {
  const int n = d.order();
  if (A.size() != B.size()) throw PreconditionError("alternating_cycle needs |A| = |B|");
  if (A.empty()) throw PreconditionError("alternating_cycle needs |A| >= 1");
  require_disjoint(n, A, B);
  const int m = static_cast<int>(A.size());

  const long need = required_edges(epsilon, A.size(), B.size());
  const long back = count_edges(d, B, A);
  if (back < need) return ViolationWitness{VertexList(B.begin(), B.end()), VertexList(A.begin(), A.end()), back,
                                           need, epsilon};

  const VertexBits a_bits = VertexBits::from_list(n, A);
  const VertexBits b_bits = VertexBits::from_list(n, B);
  auto cross = [&](Vertex v) { return masked(d.out(v), a_bits.test(v) ? b_bits : a_bits); };

  const int target = alternating_cycle_target(epsilon, m);
  VertexBits W = a_bits;
  W |= b_bits;
  int w_count = 2 * m;
  VertexList U;
  VertexList path;
  std::vector<int> pos(n, -1);
  VertexBits on(n);

  VertexList best;  // longest closure seen
  auto push = [&](Vertex v) {
    W.reset(v);
    --w_count;
    pos[v] = static_cast<int>(path.size());
    path.push_back(v);
    on.set(v);
    VertexBits back_edges = cross(v);
    back_edges &= on;
    int lo = pos[v];
    for (Vertex w = back_edges.first(); w >= 0; w = back_edges.next(w + 1)) lo = std::min(lo, pos[w]);
    if (pos[v] - lo + 1 > static_cast<int>(best.size())) best.assign(path.begin() + lo, path.end());
  };

  while (w_count != static_cast<int>(U.size())) {
    if (path.empty()) {
      push(W.first());
    } else {
      VertexBits out = cross(path.back());
      out &= W;
      const Vertex v = out.first();
      if (v >= 0) {
        push(v);
      } else {
        const Vertex u = path.back();
        path.pop_back();
        on.reset(u);
        pos[u] = -1;
        U.push_back(u);
      }
    }
  }
  if (static_cast<int>(best.size()) >= target) return VertexCycle{best};

  const int h = std::max(1, ceil_int(epsilon * m / 8.0));
  auto split = [&](const VertexList& s, const VertexBits& side) {
    VertexList r;
    for (Vertex v : s)
      if (side.test(v)) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
  };
  const VertexList W_list = W.to_list();
  for (const auto& [X, Y] : {std::pair{split(U, a_bits), split(W_list, b_bits)},
                             std::pair{split(U, b_bits), split(W_list, a_bits)}}) {
    if (static_cast<int>(X.size()) >= h && static_cast<int>(Y.size()) >= h)
      return ViolationWitness{X, Y, count_edges(d, X, Y), required_edges(epsilon, X.size(), Y.size()), epsilon};
  }
  // no large finished/unvisited split: late A-vertices never reach early B-vertices
  VertexList lateA, earlyB;
  for (auto it = path.rbegin(); it != path.rend() && static_cast<int>(lateA.size()) < h; ++it)
    if (a_bits.test(*it)) lateA.push_back(*it);
  for (auto it = path.begin(); it != path.end() && static_cast<int>(earlyB.size()) < h; ++it)
    if (b_bits.test(*it)) earlyB.push_back(*it);
  if (static_cast<int>(lateA.size()) == h && static_cast<int>(earlyB.size()) == h) {
    std::sort(lateA.begin(), lateA.end());
    std::sort(earlyB.begin(), earlyB.end());
    bool overlap = false;
    for (Vertex v : lateA)
      if (std::find(earlyB.begin(), earlyB.end(), v) != earlyB.end()) overlap = true;
    if (!overlap && count_edges(d, lateA, earlyB) == 0)
      return ViolationWitness{lateA, earlyB, 0, required_edges(epsilon, lateA.size(), earlyB.size()), epsilon};
  }
  throw std::runtime_error("alternating_cycle: neither a cycle of length " + std::to_string(target) +
                           " nor an empty pair of size " + std::to_string(h) + " (m = " + std::to_string(m) + ")");
}

GhrvCertificate ghrv_path(const Digraph& d) { return ghrv_path(d, full_span(d.order())); }

GhrvCertificate ghrv_path(const Digraph& d, const VertexBits& span) {
  const int n = d.order();
  GhrvCertificate cert;
  cert.acyclic_subgraph = Digraph(n);
  cert.levels.assign(n, -1);
  // Non-back edges of a DFS form a maximal acyclic subgraph: every back
  // edge u->v closes a cycle with the tree path v ~> u.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> state(n, kWhite);
  VertexList postorder;
  struct Frame {
    Vertex v;
    Vertex next;
  };
  std::vector<Frame> stack;
  for (Vertex root = span.first(); root >= 0; root = span.next(root + 1)) {
    if (state[root] != kWhite) continue;
    state[root] = kGrey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexBits& row = d.out(f.v);
      Vertex w = row.next(f.next);
      while (w >= 0 && !span.test(w)) w = row.next(w + 1);
      if (w < 0) {
        state[f.v] = kBlack;
        postorder.push_back(f.v);
        stack.pop_back();
        continue;
      }
      f.next = w + 1;
      if (state[w] == kGrey) continue;
      cert.acyclic_subgraph.add_edge(f.v, w);
      if (state[w] == kWhite) {
        state[w] = kGrey;
        stack.push_back({w, 0});
      }
    }
  }
  const Digraph& dag = cert.acyclic_subgraph;
  for (Vertex v : postorder) cert.levels[v] = 0;
  for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
    const Vertex u = *it;
    const VertexBits& row = dag.out(u);
    for (Vertex w = row.first(); w >= 0; w = row.next(w + 1))
      cert.levels[w] = std::max(cert.levels[w], cert.levels[u] + 1);
  }
  Vertex end = -1;
  for (Vertex v = span.first(); v >= 0; v = span.next(v + 1))
    if (end < 0 || cert.levels[v] > cert.levels[end]) end = v;
  if (end < 0) return cert;
  VertexList rev{end};
  while (cert.levels[rev.back()] > 0) {
    const Vertex v = rev.back();
    const VertexBits& row = dag.in(v);
    Vertex pick = -1;
    for (Vertex u = row.first(); u >= 0; u = row.next(u + 1))
      if (cert.levels[u] == cert.levels[v] - 1) {
        pick = u;
        break;
      }
    rev.push_back(pick);
  }
  cert.longest_path.vertices.assign(rev.rbegin(), rev.rend());
  return cert;
}

std::pair<Colour, VertexPath> asym_paths(const EdgeColouring& col, int x, int y) {
  if (col.colours() != 2) throw PreconditionError("asym_paths needs a two-colouring");
  if (x < 1 || y < 1) throw PreconditionError("asym_paths targets must be >= 1");
  const long n = col.order();
  if (n < static_cast<long>(x - 1) * (y - 1) + 1)
    throw PreconditionError("asym_paths needs n >= (x-1)(y-1)+1; n = " + std::to_string(n));
  auto red = ghrv_path(colour_class(col, kRed));
  if (red.longest_path.order() >= x) return {kRed, std::move(red.longest_path)};
  auto blue = ghrv_path(colour_class(col, kBlue));
  if (blue.longest_path.order() >= y) return {kBlue, std::move(blue.longest_path)};
  throw std::logic_error("asym_paths: product bound violated");
}

VertexPath join_cycle_paths(const Digraph& d, const std::vector<VertexCycle>& cycles) {
  const int n = d.order();
  VertexBits seen(n);
  std::vector<VertexBits> members;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i].vertices;
    if (c.empty()) throw PreconditionError("cycle " + std::to_string(i) + " is empty");
    for (Vertex v : c) {
      if (v < 0 || v >= n) throw PreconditionError("vertex id out of range");
      if (seen.test(v)) throw PreconditionError("cycles are not vertex-disjoint");
      seen.set(v);
    }
    if (c.size() > 1 && !validate_cycle(d, cycles[i]))
      throw PreconditionError("cycle " + std::to_string(i) + " is not a cycle of the digraph");
    members.push_back(VertexBits::from_list(n, c));
  }
  VertexPath path;
  if (cycles.empty()) return path;
  std::size_t entry = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i].vertices;
    const std::size_t L = c.size();
    if (i + 1 == cycles.size()) {
      for (std::size_t s = 0; s < L; ++s) path.vertices.push_back(c[(entry + s) % L]);
      break;
    }
    std::size_t exit_step = L;
    for (std::size_t s = L; s-- > 0;)
      if (d.out(c[(entry + s) % L]).intersects(members[i + 1])) {
        exit_step = s;
        break;
      }
    if (exit_step == L)
      throw PreconditionError("no edge from cycle " + std::to_string(i) + " to cycle " + std::to_string(i + 1));
    for (std::size_t s = 0; s <= exit_step; ++s) path.vertices.push_back(c[(entry + s) % L]);
    const Vertex exit_v = path.vertices.back();
    const auto& next = cycles[i + 1].vertices;
    for (std::size_t j = 0; j < next.size(); ++j)
      if (d.has_edge(exit_v, next[j])) {
        entry = j;
        break;
      }
  }
  return path;
}

OrderingOrCycle low_indegree_order(const Digraph& d, int t) {
  VertexList all(d.order());
  for (Vertex v = 0; v < d.order(); ++v) all[v] = v;
  return low_indegree_order(d, all, t);
}

OrderingOrCycle low_indegree_order(const Digraph& d, std::span<const Vertex> vertices, int t) {
  if (t < 0) throw PreconditionError("low_indegree_order needs t >= 0");
  const int n = d.order();
  VertexBits alive = VertexBits::from_list(n, vertices);
  std::vector<int> indeg(n, 0);
  for (Vertex v = alive.first(); v >= 0; v = alive.next(v + 1)) indeg[v] = d.in(v).count_and(alive);
  Ordering order;
  int remaining = alive.count();
  while (remaining > 0) {
    Vertex best = -1;
    for (Vertex v = alive.first(); v >= 0; v = alive.next(v + 1))
      if (best < 0 || indeg[v] < indeg[best]) best = v;
    if (indeg[best] > t) return front_extend_cycle(d, alive, t + 1);
    order.push_back(best);
    alive.reset(best);
    --remaining;
    VertexBits out = masked(d.out(best), alive);
    for (Vertex w = out.first(); w >= 0; w = out.next(w + 1)) --indeg[w];
  }
  return order;
}

MindegreePair min_deg_pair(const Digraph& d, double dd) {
  const int n = d.order();
  if (!(dd > 0)) throw PreconditionError("min_deg_pair needs d > 0");
  const auto e = static_cast<double>(d.edge_count());
  if (e + 1e-9 < dd * n)
    throw PreconditionError("min_deg_pair needs e(D) >= d*n; have " + std::to_string(d.edge_count()) + " < " +
                            std::to_string(dd * n));
  // conditional expectations: scores are doubled expected gains
  std::vector<int> side(n, -1);  // 0 = X, 1 = Y
  for (Vertex v = 0; v < n; ++v) {
    long sx = 0, sy = 0;
    const VertexBits& out = d.out(v);
    for (Vertex w = out.first(); w >= 0; w = out.next(w + 1)) sx += side[w] < 0 ? 1 : (side[w] == 1 ? 2 : 0);
    const VertexBits& in = d.in(v);
    for (Vertex u = in.first(); u >= 0; u = in.next(u + 1)) sy += side[u] < 0 ? 1 : (side[u] == 0 ? 2 : 0);
    side[v] = sx >= sy ? 0 : 1;
  }
  VertexBits X(n), Y(n);
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? X : Y).set(v);
  long exy = 0;
  for (Vertex v = X.first(); v >= 0; v = X.next(v + 1)) exy += d.out(v).count_and(Y);
  if (4 * exy < static_cast<long>(d.edge_count())) throw std::logic_error("min_deg_pair: bipartition below e/4");

  const int tau = std::max(1, ceil_int(dd / 4.0));
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = side[v] == 0 ? d.out(v).count_and(Y) : d.in(v).count_and(X);
  VertexList queue;
  std::vector<char> queued(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] < tau) {
      queue.push_back(v);
      queued[v] = 1;
    }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    const bool in_x = side[v] == 0;
    (in_x ? X : Y).reset(v);
    VertexBits nb = in_x ? masked(d.out(v), Y) : masked(d.in(v), X);
    for (Vertex w = nb.first(); w >= 0; w = nb.next(w + 1))
      if (--deg[w] < tau && !queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
  }
  MindegreePair p;
  p.X = X.to_list();
  p.Y = Y.to_list();
  if (p.X.empty() || p.Y.empty()) throw std::logic_error("min_deg_pair: peeling emptied the pair");
  p.mindeg = n;
  for (Vertex v : p.X) p.mindeg = std::min(p.mindeg, deg[v]);
  for (Vertex v : p.Y) p.mindeg = std::min(p.mindeg, deg[v]);
  return p;
}

VertexList extract_transitive(const Tournament& t, std::span<const Vertex> S) {
  if (S.empty()) throw PreconditionError("extract_transitive needs a nonempty set");
  const int n = t.order();
  VertexBits rem = VertexBits::from_list(n, S);
  VertexList head, tail;
  while (rem.any()) {
    const Vertex v = rem.first();
    rem.reset(v);
    VertexBits outs = masked(t.digraph().out(v), rem);
    VertexBits ins = masked(t.digraph().in(v), rem);
    if (outs.count() >= ins.count()) {
      head.push_back(v);
      rem = std::move(outs);
    } else {
      tail.push_back(v);
      rem = std::move(ins);
    }
  }
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

}  // namespace monopath
