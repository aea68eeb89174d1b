#include <algorithm>

#include "engine_internal.hpp"

namespace monopath {

namespace detail {

ViolationWitness certify_or_stall(const EdgeColouring& col, const ViolationWitness& w, const EngineConstants& k,
                                  const std::string& where) {
  auto cert = certify_violation(col.tournament(), w.A, w.B, k.epsilon, static_cast<int>(k.k0));
  if (!cert)
    throw HypothesisFailure(where + ": sets of sizes " + std::to_string(w.A.size()) + ", " +
                            std::to_string(w.B.size()) + " do not violate pseudorandomness of T");
  return *cert;
}

PathResult make_path(const EdgeColouring& col, Colour c, VertexPath p, const EngineConstants& k) {
  if (p.empty() || !validate_path(col, p, c)) throw std::logic_error("engine produced an invalid path");
  PathResult r;
  r.colour = c;
  r.target_met = c == kBlue ? p.order() >= k.r : p.order() >= k.s;
  r.path = std::move(p);
  return r;
}

std::variant<ColouredCycle, ViolationWitness> to_medium(const EdgeColouring& col, ColouredCycle c,
                                                        const EngineConstants& k, const std::string& where) {
  const long len = c.cycle.length();
  if (len < k.medium_lo)
    throw HypothesisFailure(where + ": cycle of length " + std::to_string(len) + " is below the medium band");
  if (len <= k.medium_hi) return c;
  return shorten_long_cycle(col, c.cycle, c.colour, k);
}

std::string describe(const VertexList& vs, std::size_t limit) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  if (vs.size() > limit) s += ",...";
  return s + "}";
}

}  // namespace detail

VertexList CycleCollection::covered_list() const {
  VertexList out;
  for (const auto& c : cycles) out.insert(out.end(), c.cycle.vertices.begin(), c.cycle.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

int CycleCollection::covered() const {
  int n = 0;
  for (const auto& c : cycles) n += c.cycle.length();
  return n;
}

MediumSearch find_medium_cycle(const EdgeColouring& col, std::span<const Vertex> S, const EngineConstants& k) {
  if (col.colours() != 2) throw PreconditionError("find_medium_cycle needs a two-colouring");
  MediumNotFound nf;
  const int t = static_cast<int>(std::max<long>(0, k.medium_lo - 1));
  for (Colour c : {kRed, kBlue}) {
    auto res = low_indegree_order(colour_class(col, c), S, t);
    if (auto* cyc = std::get_if<VertexCycle>(&res)) {
      auto m = detail::to_medium(col, {*cyc, c}, k, "find_medium_cycle");
      if (auto* w = std::get_if<ViolationWitness>(&m)) return detail::certify_or_stall(col, *w, k, "shortening");
      return std::get<ColouredCycle>(m);
    }
    (c == kRed ? nf.red : nf.blue) = std::get<Ordering>(std::move(res));
  }
  // a sparse medium cycle slips under the threshold; look for any cycle
  for (Colour c : {kRed, kBlue}) {
    auto res = low_indegree_order(colour_class(col, c), S, 0);
    auto* cyc = std::get_if<VertexCycle>(&res);
    if (!cyc || cyc->length() < k.medium_lo) continue;
    auto m = detail::to_medium(col, {*cyc, c}, k, "find_medium_cycle");
    if (auto* w = std::get_if<ViolationWitness>(&m)) return detail::certify_or_stall(col, *w, k, "shortening");
    return std::get<ColouredCycle>(m);
  }
  return nf;
}

std::variant<ColouredCycle, ViolationWitness> shorten_long_cycle(const EdgeColouring& col, const VertexCycle& C,
                                                                 Colour colour, const EngineConstants& k) {
  if (C.length() <= k.medium_hi) throw PreconditionError("shorten_long_cycle: cycle already within the band");
  if (!validate_cycle(col, C, colour)) throw PreconditionError("shorten_long_cycle: cycle is not monochromatic");
  const Digraph classes[2] = {colour_class(col, kRed), colour_class(col, kBlue)};
  ColouredCycle cur{C, colour};
  while (cur.cycle.length() > k.medium_hi) {
    const auto& v = cur.cycle.vertices;
    const int L = static_cast<int>(v.size());
    const int third = L / 3;
    const int b0 = (L + 1) / 2;
    const Digraph& same = classes[cur.colour];

    int in_band_i = -1, in_band_j = -1;
    int best_i = -1, best_j = -1, best_len = 0;
    bool any_chord = false;
    auto consider = [&](int i, int j) {
      if (!same.has_edge(v[i], v[j])) return;
      any_chord = true;
      const int len = ((i - j) % L + L) % L + 1;
      if (len >= L || len < k.medium_lo) return;
      if (len <= k.medium_hi && in_band_i < 0) {
        in_band_i = i;
        in_band_j = j;
      }
      if (len > best_len) {
        best_len = len;
        best_i = i;
        best_j = j;
      }
    };
    for (int i = 0; i < third; ++i)
      for (int j = b0; j < b0 + third; ++j) {
        consider(i, j);
        consider(j, i);
      }
    if (in_band_i >= 0) {
      best_i = in_band_i;
      best_j = in_band_j;
    }
    if (best_i >= 0) {
      VertexList nv;
      for (int p = best_j;; p = (p + 1) % L) {
        nv.push_back(v[p]);
        if (p == best_i) break;
      }
      cur.cycle.vertices = std::move(nv);
      continue;
    }
    if (any_chord)
      throw HypothesisFailure("shorten_long_cycle: every same-colour chord closes a cycle below the band");
    // all edges between the two arcs carry the other colour
    VertexList A(v.begin(), v.begin() + third), B(v.begin() + b0, v.begin() + b0 + third);
    const Colour other = other_colour(cur.colour);
    auto alt = alternating_cycle(classes[other], A, B, k.epsilon);
    if (auto* w = std::get_if<ViolationWitness>(&alt)) return *w;
    cur = {std::get<VertexCycle>(std::move(alt)), other};
    if (cur.cycle.length() < k.medium_lo)
      throw HypothesisFailure("shorten_long_cycle: alternating cycle of length " +
                              std::to_string(cur.cycle.length()) + " is below the band");
  }
  return cur;
}

std::variant<RedRedResult, ViolationWitness> red_red_intersection(const EdgeColouring& col, const VertexCycle& Ci,
                                                                  const VertexCycle& Cj, const EngineConstants& k) {
  const int n = col.order();
  const Digraph blue = colour_class(col, kBlue);
  const VertexBits bi = VertexBits::from_list(n, Ci.vertices);
  const VertexBits bj = VertexBits::from_list(n, Cj.vertices);
  if (bi.intersects(bj)) throw PreconditionError("red_red_intersection: cycles intersect");
  const long want = std::max<long>(1, k.redred_size);
  auto quiet = [&](const VertexCycle& from, const VertexBits& to) {
    VertexList out;
    for (Vertex v : from.vertices)
      if (!blue.out(v).intersects(to) && static_cast<long>(out.size()) < want) out.push_back(v);
    return out;
  };
  VertexList A = quiet(Ci, bj), B = quiet(Cj, bi);
  if (static_cast<long>(A.size()) < want || static_cast<long>(B.size()) < want)
    throw PreconditionError("red_red_intersection: fewer than " + std::to_string(want) +
                            " vertices without blue edges towards the other cycle");
  auto alt = alternating_cycle(colour_class(col, kRed), A, B, k.epsilon);
  if (auto* w = std::get_if<ViolationWitness>(&alt)) return *w;
  RedRedResult r;
  r.red = std::get<VertexCycle>(std::move(alt));
  for (Vertex v : r.red.vertices)
    if (bi.test(v)) r.intersection.push_back(v);
  std::sort(r.intersection.begin(), r.intersection.end());
  return r;
}

}  // namespace monopath
