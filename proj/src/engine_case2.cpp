// A large vertex set without medium cycles: bank long paths per block of a
// low back-degree ordering and chain them block to block.

#include <algorithm>
#include <map>

#include "engine_internal.hpp"

namespace monopath {

Case2Outcome case2_paths(const EdgeColouring& col, std::span<const Vertex> U, const EngineConstants& k,
                         Case2State* state) {
  if (col.colours() != 2) throw PreconditionError("case2_paths needs a two-colouring");
  const int n = col.order();
  if (2 * static_cast<long>(U.size()) < n) throw PreconditionError("case2_paths needs |U| >= n/2");
  Case2Outcome out;
  Trace& tr = out.trace;
  const Digraph classes[2] = {colour_class(col, kRed), colour_class(col, kBlue)};

  auto restart = [&](ColouredCycle c, const char* where) {
    auto m = detail::to_medium(col, std::move(c), k, where);
    if (auto* w = std::get_if<ViolationWitness>(&m))
      out.result = detail::certify_or_stall(col, *w, k, where);
    else
      out.result = Restart{std::get<ColouredCycle>(std::move(m))};
    return out;
  };

  const int thr = static_cast<int>(std::max<long>(0, k.order_threshold));
  auto ord = low_indegree_order(classes[kBlue], U, thr);
  if (auto* cyc = std::get_if<VertexCycle>(&ord)) {
    tr.push_back("case2: ordering stalled on a blue cycle of length " + std::to_string(cyc->length()));
    return restart({*cyc, kBlue}, "case2 ordering");
  }
  const Ordering& order = std::get<Ordering>(ord);
  if (state) state->ordering = order;

  const long kb = k.k_block;
  if (kb < 1) throw PreconditionError("k_block must be >= 1");
  const long nblocks = static_cast<long>(order.size()) / kb;
  if (nblocks == 0)
    throw HypothesisFailure("case2: block size " + std::to_string(kb) + " exceeds |U| = " +
                            std::to_string(order.size()));
  const long x = std::max<long>(2, k.x_target), y = std::max<long>(2, k.y_target);
  const long asym_need = (x - 1) * (y - 1) + 1;
  if (asym_need > kb)
    throw PreconditionError("case2: blocks of size " + std::to_string(kb) + " cannot host (x-1)(y-1)+1 = " +
                            std::to_string(asym_need) + " vertices");
  const long keep_going = std::max<long>((kb + 4) / 5, asym_need);

  std::vector<VertexList> blocks(nblocks);
  std::vector<std::vector<std::pair<Colour, VertexPath>>> bank(nblocks);
  std::vector<Colour> bcol(nblocks);
  int red_blocks = 0;
  for (long b = 0; b < nblocks; ++b) {
    blocks[b].assign(order.begin() + b * kb, order.begin() + (b + 1) * kb);
    VertexList rem = blocks[b];
    int nred = 0, nblue = 0;
    while (static_cast<long>(rem.size()) >= keep_going) {
      const SubColouring sub = restrict_colouring(col, rem);
      auto [c, p] = asym_paths(sub.colouring, static_cast<int>(y), static_cast<int>(x));
      VertexPath lifted{sub.lift(p.vertices)};
      (c == kRed ? nred : nblue)++;
      rem.erase(std::remove_if(rem.begin(), rem.end(),
                               [&](Vertex v) { return v == lifted.front() || v == lifted.back(); }),
                rem.end());
      bank[b].emplace_back(c, std::move(lifted));
    }
    bcol[b] = nred > nblue ? kRed : kBlue;
    red_blocks += bcol[b] == kRed;
  }
  const Colour kappa = 2 * red_blocks >= nblocks ? kRed : kBlue;
  // red edges run from later blocks back to earlier ones, blue edges forward
  std::vector<int> chain;
  for (long b = 0; b < nblocks; ++b)
    if (bcol[b] == kappa) chain.push_back(static_cast<int>(b));
  if (kappa == kBlue) std::reverse(chain.begin(), chain.end());
  tr.push_back("case2: " + std::to_string(nblocks) + " blocks, chaining " + std::to_string(chain.size()) + " " +
               colour_name(kappa) + " blocks");
  if (state) {
    state->blocks = blocks;
    state->block_colour = bcol;
    state->bank = bank;
    state->chain_colour = kappa;
    state->chain_blocks = chain;
  }

  const Digraph& K = classes[kappa];
  const long need_frontier = std::max<long>(1, (kb + 9) / 10);
  const long target = kappa == kRed ? k.s : k.r;
  std::map<Vertex, VertexPath> frontier;  // start vertex -> chained path
  for (std::size_t step = 0; step < chain.size(); ++step) {
    std::map<Vertex, VertexPath> next;
    VertexList stranded;  // ends with no kappa edge into the frontier
    for (const auto& [c, p] : bank[chain[step]]) {
      if (c != kappa) continue;
      if (step == 0) {
        next[p.front()] = p;
        continue;
      }
      const VertexBits& outs = K.out(p.back());
      const VertexPath* best = nullptr;
      for (const auto& [w, q] : frontier)
        if (outs.test(w) && (!best || q.order() > best->order())) best = &q;
      if (!best) {
        stranded.push_back(p.back());
        continue;
      }
      VertexPath joined = p;
      joined.vertices.insert(joined.vertices.end(), best->vertices.begin(), best->vertices.end());
      next[p.front()] = std::move(joined);
    }
    if (step > 0 && static_cast<long>(next.size()) < need_frontier) {
      tr.push_back("case2: frontier collapsed to " + std::to_string(next.size()) + " at chain step " +
                   std::to_string(step));
      if (static_cast<long>(stranded.size()) < need_frontier || static_cast<long>(frontier.size()) < need_frontier)
        throw HypothesisFailure("case2: stranded sets smaller than k/10");
      VertexList W1(stranded.begin(), stranded.begin() + need_frontier);
      VertexList W2;
      for (const auto& [w, q] : frontier)
        if (static_cast<long>(W2.size()) < need_frontier) W2.push_back(w);
      std::sort(W1.begin(), W1.end());
      const long e = count_edges(col.tournament(), W1, W2);
      const long req = required_edges(k.epsilon, W1.size(), W2.size());
      if (e < req) {
        out.result = detail::certify_or_stall(col, ViolationWitness{W1, W2, e, req, k.epsilon}, k, "case2 stranded");
        return out;
      }
      // every W1 -> W2 edge has the other colour
      const Colour other = other_colour(kappa);
      auto alt = alternating_cycle(classes[other], W2, W1, k.epsilon);
      if (auto* w = std::get_if<ViolationWitness>(&alt)) {
        out.result = detail::certify_or_stall(col, *w, k, "case2 alternating cycle");
        return out;
      }
      return restart({std::get<VertexCycle>(std::move(alt)), other}, "case2 alternating cycle");
    }
    frontier = std::move(next);
    if (state) {
      state->frontier.emplace_back();
      for (const auto& [w, q] : frontier) state->frontier.back().push_back(q);
    }
    const VertexPath* best = nullptr;
    for (const auto& [w, q] : frontier)
      if (!best || q.order() > best->order()) best = &q;
    if (best && best->order() >= target) break;
  }
  if (frontier.empty()) throw HypothesisFailure("case2: no banked path of the chained colour");
  const VertexPath* best = nullptr;
  for (const auto& [w, q] : frontier)
    if (!best || q.order() > best->order()) best = &q;
  out.result = detail::make_path(col, kappa, *best, k);
  return out;
}

}  // namespace monopath
