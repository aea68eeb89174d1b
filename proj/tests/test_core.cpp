#include <doctest.h>

#include "helpers.hpp"
#include "monopath/core.hpp"
#include "monopath/generators.hpp"
#include "monopath/io.hpp"

using namespace monopath;
using namespace testing_support;

TEST_CASE("count_edges on the transitive tournament") {
  const Tournament t = transitive_tournament(4);
  CHECK(count_edges(t, VertexList{0, 1}, VertexList{2, 3}) == 4);
  CHECK(count_edges(t, VertexList{2, 3}, VertexList{0, 1}) == 0);
}

TEST_CASE("count_edges agrees with a per-pair recount") {
  const Tournament t = random_tournament(10, 7);
  const VertexList A{0, 1, 2, 3, 4}, B{5, 6, 7, 8, 9};
  CHECK(count_edges(t, A, B) == brute_count(t.digraph(), A, B));
  CHECK(count_edges(t, A, B) + count_edges(t, B, A) == 25);
}

TEST_CASE("count_edges rejects overlapping sets") {
  const Tournament t = transitive_tournament(4);
  CHECK_THROWS_AS(count_edges(t, VertexList{0, 1}, VertexList{1, 2}), PreconditionError);
}

TEST_CASE("colour classes") {
  const Tournament t = random_tournament(8, 3);
  const EdgeColouring red(t, 2, kRed);
  CHECK(colour_class(red, kRed) == t.digraph());
  CHECK(colour_class(red, kBlue).edge_count() == 0);

  const EdgeColouring col = random_colouring(t, 2, 3);
  const Digraph r = colour_class(col, kRed), b = colour_class(col, kBlue);
  CHECK(r.edge_count() + b.edge_count() == 28);
  for (auto [u, v] : t.digraph().edges()) CHECK(r.has_edge(u, v) != b.has_edge(u, v));
}

TEST_CASE("path and cycle validation") {
  const Tournament t = transitive_tournament(3);
  CHECK(validate_path(t.digraph(), VertexPath{{1}}));
  CHECK(validate_path(t.digraph(), VertexPath{{0, 1, 2}}));
  CHECK_FALSE(validate_path(t.digraph(), VertexPath{{2, 1, 0}}));
  CHECK_FALSE(validate_path(t.digraph(), VertexPath{{0, 0}}));
  CHECK_FALSE(validate_path(t.digraph(), VertexPath{{0, 7}}));

  EdgeColouring col(t, 2, kRed);
  col.set(1, 2, kBlue);
  CHECK(validate_path(col, VertexPath{{0, 1}}, kRed));
  CHECK_FALSE(validate_path(col, VertexPath{{0, 1, 2}}, kRed));
  CHECK(validate_path(col, VertexPath{{0, 2}}, kRed));

  CHECK(validate_cycle(directed_cycle(3), VertexCycle{{0, 1, 2}}));
  CHECK(validate_cycle(directed_cycle(3), VertexCycle{{1, 2, 0}}));
  CHECK_FALSE(validate_cycle(directed_cycle(3), VertexCycle{{0, 2, 1}}));
  CHECK_FALSE(validate_cycle(t.digraph(), VertexCycle{{0, 1, 2}}));
}

TEST_CASE("tournament construction rejects non-tournaments") {
  Digraph d(3);
  d.add_edge(0, 1);
  CHECK_THROWS_AS(Tournament{d}, PreconditionError);
  d.add_edge(1, 2);
  d.add_edge(0, 2);
  CHECK_NOTHROW(Tournament{d});
  d.add_edge(2, 0);
  CHECK_THROWS_AS(Tournament{d}, PreconditionError);
  CHECK_THROWS_AS(d.add_edge(1, 1), PreconditionError);
}

TEST_CASE("required_edges rounds up at exact products") {
  CHECK(required_edges(0.25, 2, 2) == 1);
  CHECK(required_edges(0.25, 4, 4) == 4);
  CHECK(required_edges(0.25, 3, 3) == 3);
  CHECK(required_edges(0.1, 10, 10) == 10);
}

TEST_CASE("witness certification recounts edges") {
  const Tournament t = transitive_tournament(8);
  auto w = certify_violation(t, {6, 7}, {0, 1}, 0.25, 2);
  REQUIRE(w);
  CHECK(w->observed == 0);
  CHECK(w->required == 1);
  CHECK(verify_witness(t, *w, 2));
  CHECK_FALSE(verify_witness(t, *w, 3));
  CHECK_FALSE(certify_violation(t, {0, 1}, {6, 7}, 0.25, 2));
  ViolationWitness forged = *w;
  forged.A = {0, 1};
  forged.B = {6, 7};
  CHECK_FALSE(verify_witness(t, forged, 2));
}

TEST_CASE("oriented path patterns") {
  const auto p = OrientedPathPattern::parse("2,1");
  CHECK(p.segments == std::vector<int>{2, 1});
  CHECK(p.order() == 4);
  CHECK(p.longest_run() == 2);
  CHECK(p.edge_is_forward(0));
  CHECK(p.edge_is_forward(1));
  CHECK_FALSE(p.edge_is_forward(2));
  CHECK(p.to_string() == "2,1");
  CHECK_THROWS_AS(OrientedPathPattern::parse(""), PreconditionError);
  CHECK_THROWS_AS(OrientedPathPattern::parse("2,0"), PreconditionError);
  CHECK_THROWS_AS(OrientedPathPattern::parse("2,x"), PreconditionError);
}

TEST_CASE("restricting a colouring relabels and lifts") {
  const Tournament t = random_tournament(9, 4);
  const EdgeColouring col = random_colouring(t, 3, 5);
  const VertexList S{8, 2, 5};
  const SubColouring sub = restrict_colouring(col, S);
  CHECK(sub.colouring.order() == 3);
  CHECK(sub.colouring.colours() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && sub.colouring.tournament().beats(i, j)) {
        CHECK(t.beats(S[i], S[j]));
        CHECK(sub.colouring.colour(i, j) == col.colour(S[i], S[j]));
      }
  CHECK(sub.lift(VertexList{2, 0}) == VertexList{5, 8});
}

TEST_CASE("text formats round-trip") {
  const Tournament t = random_tournament(7, 21);
  CHECK(parse_tournament(render_tournament(t)) == t);
  const EdgeColouring col = random_colouring(t, 3, 2);
  CHECK(parse_colouring(render_colouring(col)) == col);
  CHECK(parse_colouring(render_colouring(col), t) == col);
  CHECK_THROWS_AS(parse_colouring(render_colouring(col), random_tournament(7, 22)), ParseError);
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_tournament("tournament 3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tournament("tournament 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tournament("colouring 2 2\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tournament("tournament 2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_colouring("colouring 2 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_colouring("colouring 2 2\n0 1\n"), ParseError);
}
