// Red/blue path partition of a two-coloured complete digraph, built by
// inserting one vertex at a time.

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "monopath/primitives.hpp"

namespace monopath {

namespace {

using Path = std::deque<Vertex>;

struct Partition {
  Path red, blue;
};

class Inserter {
 public:
  explicit Inserter(const CompleteDigraphColouring& h) : h_(h) {}

  bool insert(Partition& p, Vertex v) const {
    if (direct(p, v)) return true;
    // eject one endpoint, place v, then re-place the ejected vertex
    for (int which = 0; which < 4; ++which) {
      Partition q = p;
      Path& side = which < 2 ? q.red : q.blue;
      if (side.empty()) continue;
      Vertex e;
      if (which % 2 == 0) {
        e = side.back();
        side.pop_back();
      } else {
        e = side.front();
        side.pop_front();
      }
      if (direct(q, v) && direct(q, e)) {
        p = std::move(q);
        return true;
      }
    }
    return false;
  }

 private:
  bool is(Vertex u, Vertex w, Colour c) const { return h_.colour(u, w) == c; }

  bool direct(Partition& p, Vertex v) const {
    Path& R = p.red;
    Path& B = p.blue;
    if (R.empty()) {
      R.push_back(v);
      return true;
    }
    if (is(v, R.front(), kRed)) return R.push_front(v), true;
    if (is(R.back(), v, kRed)) return R.push_back(v), true;
    if (B.empty()) {
      B.push_back(v);
      return true;
    }
    if (is(v, B.front(), kBlue)) return B.push_front(v), true;
    if (is(B.back(), v, kBlue)) return B.push_back(v), true;
    if (is(R.back(), B.back(), kRed) && is(B.back(), v, kRed)) {
      R.push_back(B.back());
      B.pop_back();
      R.push_back(v);
      return true;
    }
    if (is(B.back(), R.back(), kBlue) && is(R.back(), v, kBlue)) {
      B.push_back(R.back());
      R.pop_back();
      B.push_back(v);
      return true;
    }
    if (is(v, B.front(), kRed) && is(B.front(), R.front(), kRed)) {
      R.push_front(B.front());
      B.pop_front();
      R.push_front(v);
      return true;
    }
    if (is(v, R.front(), kBlue) && is(R.front(), B.front(), kBlue)) {
      B.push_front(R.front());
      R.pop_front();
      B.push_front(v);
      return true;
    }
    for (auto [P, c] : {std::pair<Path*, Colour>{&R, kRed}, {&B, kBlue}})
      for (std::size_t i = 0; i + 1 < P->size(); ++i)
        if (is((*P)[i], v, c) && is(v, (*P)[i + 1], c)) {
          P->insert(P->begin() + static_cast<std::ptrdiff_t>(i + 1), v);
          return true;
        }
    return false;
  }

  const CompleteDigraphColouring& h_;
};

// Exact search over subsets for a red path plus blue path covering `vs`.
bool exact_partition(const CompleteDigraphColouring& h, const VertexList& vs, Partition& out) {
  const int m = static_cast<int>(vs.size());
  if (m > 14) return false;
  const std::size_t full = std::size_t{1} << m;
  // ends[c][S]: bitmask of possible last vertices of a colour-c Hamilton path on S
  std::vector<std::uint16_t> ends[2] = {std::vector<std::uint16_t>(full, 0), std::vector<std::uint16_t>(full, 0)};
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < m; ++i) ends[c][std::size_t{1} << i] = static_cast<std::uint16_t>(1u << i);
    for (std::size_t S = 1; S < full; ++S)
      for (int i = 0; i < m; ++i) {
        if (!((ends[c][S] >> i) & 1u)) continue;
        for (int j = 0; j < m; ++j)
          if (!((S >> j) & 1u) && h.colour(vs[i], vs[j]) == c) ends[c][S | (std::size_t{1} << j)] |= 1u << j;
      }
  }
  auto rebuild = [&](int c, std::size_t S) {
    Path p;
    if (!S) return p;
    int last = std::countr_zero(static_cast<unsigned>(ends[c][S]));
    while (true) {
      p.push_front(vs[last]);
      const std::size_t rest = S & ~(std::size_t{1} << last);
      if (!rest) break;
      for (int i = 0; i < m; ++i)
        if (((ends[c][rest] >> i) & 1u) && h.colour(vs[i], vs[last]) == c) {
          last = i;
          break;
        }
      S = rest;
    }
    return p;
  };
  for (std::size_t S = 0; S < full; ++S) {
    const std::size_t T = (full - 1) & ~S;
    if ((S && !ends[kRed][S]) || (T && !ends[kBlue][T])) continue;
    out.red = rebuild(kRed, S);
    out.blue = rebuild(kBlue, T);
    return true;
  }
  return false;
}

}  // namespace

RaynaudResult raynaud_partition(const CompleteDigraphColouring& h) {
  const int n = h.order();
  if (n < 1) throw PreconditionError("raynaud_path needs n >= 1");
  Inserter ins(h);
  Partition p;
  for (Vertex v = 0; v < n; ++v) {
    if (ins.insert(p, v)) continue;
    VertexList placed(p.red.begin(), p.red.end());
    placed.insert(placed.end(), p.blue.begin(), p.blue.end());
    placed.push_back(v);
    if (!exact_partition(h, placed, p)) throw std::logic_error("raynaud_path: insertion stalled");
  }
  if (static_cast<int>(p.red.size() + p.blue.size()) != n) throw std::logic_error("raynaud_path: lost a vertex");
  RaynaudResult r;
  r.red.vertices.assign(p.red.begin(), p.red.end());
  r.blue.vertices.assign(p.blue.begin(), p.blue.end());
  if (r.red.order() >= r.blue.order()) {
    r.colour = kRed;
    r.path = r.red;
  } else {
    r.colour = kBlue;
    r.path = r.blue;
  }
  return r;
}

}  // namespace monopath
