// Many disjoint medium cycles: join them through auxiliary colourings on
// cycle indices.

#include <algorithm>

#include "engine_internal.hpp"

namespace monopath {

namespace {

// Number of vertices of `from` with a `cls` out-neighbour in `to`.
int senders(const Digraph& cls, std::span<const Vertex> from, const VertexBits& to) {
  int c = 0;
  for (Vertex v : from)
    if (cls.out(v).intersects(to)) ++c;
  return c;
}

// Hamilton path of a tournament given by `beats`, by insertion.
template <class Beats>
std::vector<int> hamilton_path(const std::vector<int>& items, Beats beats) {
  std::vector<int> path;
  for (int v : items) {
    if (path.empty() || beats(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    std::size_t pos = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (beats(path[i], v) && beats(v, path[i + 1])) {
        pos = i + 1;
        break;
      }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(pos), v);
  }
  return path;
}

}  // namespace

ExtractOutcome case1_path(const EdgeColouring& col_in, const CycleCollection& coll, const EngineConstants& k) {
  const int n = col_in.order();
  if (2 * coll.covered() < n) throw PreconditionError("case1_path needs the cycles to cover at least n/2 vertices");
  ExtractOutcome out;
  Trace& tr = out.trace;

  int blue_cover = 0, red_cover = 0;
  for (const auto& c : coll.cycles) (c.colour == kBlue ? blue_cover : red_cover) += c.cycle.length();
  const bool swap = red_cover > blue_cover;
  const EdgeColouring col = swap ? col_in.swapped() : col_in;
  auto real = [&](Colour c) { return swap ? other_colour(c) : c; };
  if (swap) tr.push_back("case1: red cycles dominate, colours swapped");

  std::vector<const VertexCycle*> C;
  for (const auto& c : coll.cycles)
    if (real(c.colour) == kBlue) C.push_back(&c.cycle);
  const int t = static_cast<int>(C.size());
  std::vector<VertexBits> member;
  for (auto* c : C) member.push_back(VertexBits::from_list(n, c->vertices));
  const Digraph blue = colour_class(col, kBlue);
  const Digraph red = colour_class(col, kRed);

  const int thr = static_cast<int>(std::max<long>(1, k.aux_threshold));
  CompleteDigraphColouring H(t, kRed);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j && senders(blue, C[i]->vertices, member[j]) >= thr) H.set(i, j, kBlue);

  std::vector<int> mate(t, -1);
  std::vector<std::pair<int, int>> M;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t && mate[i] < 0; ++j)
      if (mate[j] < 0 && H.colour(i, j) == kRed && H.colour(j, i) == kRed) {
        mate[i] = j;
        mate[j] = i;
        M.emplace_back(i, j);
      }
  tr.push_back("case1: " + std::to_string(t) + " blue cycles, red-red matching of size " + std::to_string(M.size()));

  auto finish = [&](Colour c, VertexPath p) {
    out.result = detail::make_path(col_in, real(c), std::move(p), k);
    return out;
  };

  if (4 * static_cast<int>(M.size()) <= t) {
    std::vector<int> free;
    for (int i = 0; i < t; ++i)
      if (mate[i] < 0) free.push_back(i);
    auto beats = [&](int i, int j) { return H.colour(i, j) == kBlue && (i < j || H.colour(j, i) == kRed); };
    const auto order = hamilton_path(free, beats);
    std::vector<VertexCycle> seq;
    for (int i : order) seq.push_back(*C[i]);
    tr.push_back("case1: joining " + std::to_string(seq.size()) + " cycles along the blue auxiliary tournament");
    return finish(kBlue, join_cycle_paths(blue, seq));
  }

  std::vector<VertexCycle> Bc, Rc;
  std::vector<VertexList> I;
  for (auto [i, j] : M) {
    std::variant<RedRedResult, ViolationWitness> rr;
    try {
      rr = red_red_intersection(col, *C[i], *C[j], k);
    } catch (const PreconditionError& e) {
      throw HypothesisFailure(std::string("case1: ") + e.what());
    }
    if (auto* w = std::get_if<ViolationWitness>(&rr)) {
      out.result = detail::certify_or_stall(col_in, *w, k, "red-red intersection");
      return out;
    }
    auto& res = std::get<RedRedResult>(rr);
    Bc.push_back(*C[i]);
    Rc.push_back(std::move(res.red));
    I.push_back(std::move(res.intersection));
  }
  const int m = static_cast<int>(I.size());
  std::vector<VertexBits> ib;
  for (const auto& s : I) ib.push_back(VertexBits::from_list(n, s));
  CompleteDigraphColouring H2(m, kRed);
  for (int p = 0; p < m; ++p) {
    const int need = std::max(1, ceil_int(static_cast<double>(I[p].size()) / 4.0));
    for (int q = 0; q < m; ++q)
      if (p != q && senders(blue, I[p], ib[q]) >= need) H2.set(p, q, kBlue);
  }
  const auto [c2, aux_path] = raynaud_path(H2);
  tr.push_back("case1: second auxiliary colouring on " + std::to_string(m) + " intersections gives a " +
               colour_name(real(c2)) + " auxiliary path of order " + std::to_string(aux_path.order()));

  if (c2 == kRed) {
    // a red auxiliary edge still needs red senders between the intersections
    for (int idx = 0; idx + 1 < aux_path.order(); ++idx) {
      const int p = aux_path.vertices[idx], q = aux_path.vertices[idx + 1];
      if (senders(red, I[p], ib[q]) >= 1) continue;
      const Digraph& all = col.tournament().digraph();
      VertexList X;
      for (Vertex v : I[p])
        if (!all.out(v).intersects(ib[q])) X.push_back(v);
      out.result = detail::certify_or_stall(col_in, ViolationWitness{X, I[q], 0, 0, k.epsilon}, k,
                                            "intersection senders");
      return out;
    }
  }
  std::vector<VertexCycle> seq;
  for (int p : aux_path.vertices) seq.push_back(c2 == kBlue ? Bc[p] : Rc[p]);
  return finish(c2, join_cycle_paths(c2 == kBlue ? blue : red, seq));
}

}  // namespace monopath
