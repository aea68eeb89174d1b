#include "monopath/engine.hpp"

#include <algorithm>
#include <cstdio>

#include "engine_internal.hpp"

namespace monopath {

namespace {

std::string constants_line(const EngineConstants& k) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "constants: a=%g b=%g d=%g k_block=%ld x=%ld y=%ld medium=[%ld,%ld] aux=%ld redred=%ld order=%ld "
                "k0=%ld c_general=%.6g",
                k.a, k.b, k.d, k.k_block, k.x_target, k.y_target, k.medium_lo, k.medium_hi, k.aux_threshold,
                k.redred_size, k.order_threshold, k.k0, k.c_general);
  return buf;
}

PathResult ghrv_fallback(const EdgeColouring& col, const EngineConstants& k) {
  PathResult best;
  bool have = false;
  for (Colour c : {kBlue, kRed}) {
    auto cert = ghrv_path(colour_class(col, c));
    if (cert.longest_path.empty()) continue;
    PathResult p = detail::make_path(col, c, std::move(cert.longest_path), k);
    if (!have || (p.target_met && !best.target_met) ||
        (p.target_met == best.target_met && p.path.order() > best.path.order())) {
      best = std::move(p);
      have = true;
    }
  }
  if (!have) best = detail::make_path(col, kBlue, VertexPath{{0}}, k);
  return best;
}

void check_collection(const CycleCollection& coll, const EdgeColouring& col, const EngineConstants& k) {
  VertexBits seen(col.order());
  for (const auto& c : coll.cycles) {
    if (!validate_cycle(col, c.cycle, c.colour)) throw std::logic_error("collection holds a non-monochromatic cycle");
    if (c.cycle.length() < k.medium_lo || c.cycle.length() > k.medium_hi)
      throw std::logic_error("collection holds a cycle outside the medium band");
    for (Vertex v : c.cycle.vertices) {
      if (seen.test(v)) throw std::logic_error("collection cycles intersect");
      seen.set(v);
    }
  }
}

}  // namespace

ExtractOutcome extract(const EdgeColouring& col, long r, long s, double epsilon, double sigma,
                       const EngineOverrides& overrides) {
  if (col.colours() != 2) throw PreconditionError("extract needs a two-colouring");
  const int n = col.order();
  const EngineConstants k = derive_constants(epsilon, sigma, n, r, s, overrides);
  ExtractOutcome out;
  Trace& tr = out.trace;
  tr.push_back(constants_line(k));
  if (k.flags.overridden_regime) tr.push_back("overridden regime: default constants replaced");
  if (!k.flags.holds()) tr.push_back("hypothesis r,s <= cn and rs <= cn^2/log n not met");
  if (k.flags.k_block_exceeds_n) tr.push_back("default constants exceed instance size (k_block > n)");

  if (r <= 1 || s <= 1) {
    out.result = detail::make_path(col, r <= 1 ? kBlue : kRed, VertexPath{{0}}, k);
    tr.push_back("trivial target");
    return out;
  }

  auto append = [&](const Trace& t) { tr.insert(tr.end(), t.begin(), t.end()); };
  try {
    CycleCollection coll;
    VertexBits covered(n);
    auto add = [&](ColouredCycle c) {
      for (Vertex v : c.cycle.vertices) covered.set(v);
      tr.push_back("medium " + colour_name(c.colour) + " cycle of length " + std::to_string(c.cycle.length()) +
                   ", covered " + std::to_string(covered.count()) + "/" + std::to_string(n));
      coll.cycles.push_back(std::move(c));
      check_collection(coll, col, k);
    };
    while (2 * covered.count() < n) {
      VertexList rest;
      for (Vertex v = 0; v < n; ++v)
        if (!covered.test(v)) rest.push_back(v);
      auto found = find_medium_cycle(col, rest, k);
      if (auto* c = std::get_if<ColouredCycle>(&found)) {
        add(std::move(*c));
        continue;
      }
      if (auto* w = std::get_if<ViolationWitness>(&found)) {
        out.result = *w;
        tr.push_back("violation while shortening a long cycle");
        return out;
      }
      tr.push_back("no medium cycle among " + std::to_string(rest.size()) + " uncovered vertices: case 2");
      Case2Outcome c2 = case2_paths(col, rest, k);
      append(c2.trace);
      if (auto* rs = std::get_if<Restart>(&c2.result)) {
        tr.push_back("restart");
        add(std::move(rs->cycle));
        continue;
      }
      if (auto* p = std::get_if<PathResult>(&c2.result))
        out.result = std::move(*p);
      else
        out.result = std::get<ViolationWitness>(std::move(c2.result));
      return out;
    }
    tr.push_back("medium cycles cover at least n/2: case 1");
    ExtractOutcome c1 = case1_path(col, coll, k);
    append(c1.trace);
    out.result = std::move(c1.result);
    return out;
  } catch (const HypothesisFailure& e) {
    tr.push_back(std::string("stall: ") + e.what());
    tr.push_back("fallback: longest greedy acyclic-subgraph path per colour");
    out.result = ghrv_fallback(col, k);
    return out;
  }
}

KColourOutcome k_colour_extract(const EdgeColouring& col, long target, double epsilon, double sigma,
                                const EngineOverrides& overrides) {
  if (col.colours() < 2) throw PreconditionError("k_colour_extract needs k >= 2");
  if (target < 1) throw PreconditionError("target must be >= 1");
  const int n = col.order();
  KColourOutcome out;
  const EngineConstants k = derive_constants(epsilon, sigma, n, target, target, overrides);
  ShrinkReport shrink;
  VertexList S(n);
  for (Vertex v = 0; v < n; ++v) S[v] = v;
  shrink.chain.push_back(S);

  for (int kc = col.colours(); kc > 2; --kc) {
    const Colour c = kc - 1;
    const VertexBits span = VertexBits::from_list(n, S);
    auto cert = ghrv_path(colour_class(col, c), span);
    out.trace.push_back("colour " + std::to_string(c) + " on " + std::to_string(S.size()) +
                        " vertices: longest greedy path of order " + std::to_string(cert.longest_path.order()));
    if (cert.longest_path.order() >= target) {
      out.result = detail::make_path(col, c, std::move(cert.longest_path), k);
      std::get<PathResult>(out.result).target_met = true;
      return out;
    }
    // fewer than `target` levels: the largest level class has no colour-c edges
    std::vector<VertexList> classes;
    for (Vertex v : S) {
      const int l = cert.levels[v];
      if (l >= static_cast<int>(classes.size())) classes.resize(l + 1);
      classes[l].push_back(v);
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i < classes.size(); ++i)
      if (classes[i].size() > classes[pick].size()) pick = i;
    S = classes[pick];
    shrink.chain.push_back(S);
    out.trace.push_back("shrink to level class " + std::to_string(pick) + " of size " + std::to_string(S.size()));
  }

  const SubColouring sub = restrict_colouring(col, S);
  EdgeColouring two(sub.colouring.tournament(), 2);
  const int m = sub.colouring.order();
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < m; ++v)
      if (u != v && sub.colouring.tournament().beats(u, v)) {
        const Colour c = sub.colouring.colour(u, v);
        if (c > 1) throw std::logic_error("k_colour_extract: a removed colour survived the shrink");
        two.set(u, v, c);
      }
  ExtractOutcome inner = extract(two, target, target, epsilon, sigma, overrides);
  out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
  if (auto* w = std::get_if<ViolationWitness>(&inner.result)) {
    ViolationWitness lifted{sub.lift(w->A), sub.lift(w->B), w->observed, w->required, w->epsilon};
    std::sort(lifted.A.begin(), lifted.A.end());
    std::sort(lifted.B.begin(), lifted.B.end());
    out.result = std::move(lifted);
    return out;
  }
  const auto& p = std::get<PathResult>(inner.result);
  PathResult lifted = detail::make_path(col, p.colour, VertexPath{sub.lift(p.path.vertices)}, k);
  if (lifted.target_met) {
    out.result = std::move(lifted);
    return out;
  }
  shrink.reason = "two-colour stage on " + std::to_string(S.size()) + " vertices found order " +
                  std::to_string(lifted.path.order()) + " < " + std::to_string(target);
  out.result = std::move(shrink);
  return out;
}

}  // namespace monopath
