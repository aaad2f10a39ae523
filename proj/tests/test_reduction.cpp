#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace tbn;
using namespace tbn::testing;

TEST_SUITE_BEGIN("reduction");

TEST_CASE("dhar burn") {
  MetricGraph g0 = gamma0();
  Point v1 = vertex(g0, "v1"), v2 = vertex(g0, "v2"), v3 = vertex(g0, "v3");

  SUBCASE("two chips inside one edge block the fire") {
    Divisor d = div_of({{v1, 1},
                        {edge_point(g0, "p2a", Rational(1, 4)), 1},
                        {edge_point(g0, "p2a", Rational(3, 4)), 1}});
    BurnResult r = dhar_burn(g0, d, v1);
    CHECK(!r.unburnt.empty());
    CHECK(r.boundary_chips.size() == 2);
  }
  SUBCASE("v1+v2+v3 is v1-reduced") {
    Divisor d = div_of({{v1, 1}, {v2, 1}, {v3, 1}});
    CHECK(dhar_burn(g0, d, v1).unburnt.empty());
    CHECK(dhar_burn(g0, d, v2).unburnt.empty());
    CHECK(dhar_burn(g0, d, v3).unburnt.empty());
  }
  SUBCASE("zero divisor burns completely") {
    CHECK(dhar_burn(g0, Divisor{}, v1).unburnt.empty());
    CHECK(dhar_burn(g0, Divisor{}, edge_point(g0, "p1b", Rational(1, 3))).unburnt.empty());
  }
  SUBCASE("negative coefficient away from basepoint rejected") {
    Divisor d = div_of({{v2, -1}});
    CHECK_THROWS_WITH_AS(dhar_burn(g0, d, v1),
                         doctest::Contains("NotEffectiveAwayFromBasepoint"), Error);
  }
}

TEST_CASE("fire_subgraph reproduces the worked firings") {
  SUBCASE("genus-2 subgraph bounded by v1 and w2 on lengths (1,1,2)") {
    MetricGraph g = lol4_112();
    Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "w2"), 1}, {vertex(g, "v3"), 1}});
    // the genus-2 side contains w3 and the pairs (w2,v3), (w3,v1) plus s3
    ClosedSubgraph s;
    for (const char* id : {"p2a", "p2b", "p3a", "p3b", "s3"}) s.add_full_edge(g, g.edge_id(id));
    Divisor fired = fire_subgraph(g, d, s, Rational(1));
    Divisor expect = div_of({{vertex(g, "w1"), 1}, {vertex(g, "v2"), 1}, {vertex(g, "v3"), 1}});
    CHECK(fired == expect);
  }
  SUBCASE("loop bounded by v1 and w3 on lengths (5,4,3)") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v1"), 1},
                        {vertex(g, "w3"), 1},
                        {edge_point(g, "s2", Rational(3)), 1}});
    ClosedSubgraph s;
    s.add_full_edge(g, g.edge_id("p3a"));
    s.add_full_edge(g, g.edge_id("p3b"));
    Divisor fired = fire_subgraph(g, d, s, Rational(3));
    Divisor expect = div_of({{edge_point(g, "s1", Rational(3)), 1},
                             {edge_point(g, "s2", Rational(3)), 1},
                             {vertex(g, "v3"), 1}});
    CHECK(fired == expect);
  }
  SUBCASE("firing the entire graph is a no-op") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v2"), 2}});
    CHECK(fire_subgraph(g, d, ClosedSubgraph::whole_graph(g), Rational(7)) == d);
  }
  SUBCASE("time too large") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "w3"), 1}});
    ClosedSubgraph s;
    s.add_full_edge(g, g.edge_id("p3a"));
    s.add_full_edge(g, g.edge_id("p3b"));
    CHECK_THROWS_WITH_AS(fire_subgraph(g, d, s, Rational(4)),
                         doctest::Contains("FiringTimeTooLarge"), Error);
  }
  SUBCASE("insufficient chips") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v1"), 1}});
    ClosedSubgraph s;
    s.add_full_edge(g, g.edge_id("p3a"));
    s.add_full_edge(g, g.edge_id("p3b"));
    CHECK_THROWS_WITH_AS(fire_subgraph(g, d, s, Rational(1)),
                         doctest::Contains("InsufficientChips"), Error);
  }
  SUBCASE("head-on fronts merge exactly at the midpoint") {
    MetricGraph g = gamma0();
    // fire everything except the open interior of p1a: the chips at v1 and
    // v2 converge inside that edge
    ClosedSubgraph s;
    for (const char* id : {"p1b", "p2a", "p2b", "p3a", "p3b"}) s.add_full_edge(g, g.edge_id(id));
    Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "v2"), 1}, {vertex(g, "v3"), 1}});
    Divisor fired = fire_subgraph(g, d, s, Rational(1, 2));
    CHECK(fired.coeff(edge_point(g, "p1a", Rational(1, 2))) == 2);
    CHECK(fired.coeff(vertex(g, "v3")) == 1);
    CHECK_THROWS_WITH_AS(fire_subgraph(g, d, s, Rational(2, 3)),
                         doctest::Contains("FiringTimeTooLarge"), Error);
  }
}

TEST_CASE("reduce reproduces the worked example") {
  MetricGraph g = lol4_112();
  Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "w2"), 1}, {vertex(g, "v3"), 1}});
  SUBCASE("w3-reduced form is v1 + v2 + midpoint of [v3,w3]") {
    ReducedForm rf = reduce(g, d, vertex(g, "w3"));
    Divisor expect = div_of({{vertex(g, "v1"), 1},
                             {vertex(g, "v2"), 1},
                             {edge_point(g, "s3", Rational(1)), 1}});
    CHECK(rf.divisor == expect);
    CHECK(dhar_burn(g, rf.divisor, vertex(g, "w3")).unburnt.empty());
  }
  SUBCASE("idempotence") {
    ReducedForm rf = reduce(g, d, vertex(g, "w3"));
    CHECK(reduce(g, rf.divisor, vertex(g, "w3")).divisor == rf.divisor);
  }
  SUBCASE("equivalence of the two §-example forms") {
    Divisor other = div_of({{vertex(g, "w1"), 1}, {vertex(g, "v2"), 1}, {vertex(g, "v3"), 1}});
    CHECK(is_equivalent(g, d, other));
    CHECK(is_equivalent(g, d, d));
  }
}

TEST_CASE("reduce on gamma0 recovers the rank-1 class") {
  MetricGraph g = gamma0();
  Point v1 = vertex(g, "v1"), v2 = vertex(g, "v2"), v3 = vertex(g, "v3");
  Divisor cls = div_of({{v1, 1}, {v2, 1}, {v3, 1}});
  CHECK(reduce(g, cls, v1).divisor == cls);
  CHECK(reduce(g, cls, v2).divisor == cls);
  // an equivalent divisor obtained by a firing reduces back to the class
  ClosedSubgraph s;
  for (const char* id : {"p1b", "p2a", "p2b", "p3a", "p3b"}) s.add_full_edge(g, g.edge_id(id));
  Divisor moved = fire_subgraph(g, cls, s, Rational(1, 4));
  CHECK(reduce(g, moved, v1).divisor == cls);
}

TEST_CASE("equivalence distinguishes v1 from w1") {
  MetricGraph g = lol4_543();
  Divisor a = div_of({{vertex(g, "v1"), 1}});
  Divisor b = div_of({{vertex(g, "w1"), 1}});
  CHECK(!is_equivalent(g, a, b));
}

TEST_CASE("effective representatives") {
  MetricGraph g = lol4_543();
  SUBCASE("negative degree has none") {
    Divisor d = div_of({{vertex(g, "v1"), -1}});
    CHECK(!effective_representative(g, d));
  }
  SUBCASE("canonical divisor is its own witness") {
    auto r = effective_representative(g, canonical_divisor(g));
    REQUIRE(r);
    CHECK(r->degree() == 6);
  }
  SUBCASE("reduction handles negative coefficients") {
    // v1 - w1 + v2 has degree 1; existence must match the basepoint-free rule
    Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "w1"), -1}, {vertex(g, "v2"), 1}});
    auto r = effective_representative(g, d);
    if (r) {
      CHECK(r->is_effective());
      CHECK(is_equivalent(g, *r, d));
    }
    // consistency across basepoints: effectivity is basepoint-independent
    for (const char* name : {"v2", "w3"}) {
      ReducedForm rf = reduce(g, d, vertex(g, name));
      CHECK((rf.divisor.coeff(vertex(g, name)) >= 0) == (bool)r);
    }
  }
}

TEST_CASE("reduction properties on random divisors") {
  Rng rng(7);
  for (const MetricGraph& g : {lol4_543(), gamma0(), yu_graph()}) {
    Lattice lat = build_lattice(g, 2);
    Point q0 = Point::at_vertex(g.canonical_basepoint());
    for (int trial = 0; trial < 12; ++trial) {
      Divisor d = random_effective(lat, 3, rng);
      ReducedForm rf = reduce(g, d, q0);
      CHECK(rf.divisor.degree() == d.degree());
      CHECK(reduce(g, rf.divisor, q0).divisor == rf.divisor);  // idempotent
      // effective away from the basepoint, and the burn consumes everything
      Divisor away = rf.divisor;
      away.add(q0, -away.coeff(q0));
      CHECK(away.is_effective());
      CHECK(dhar_burn(g, rf.divisor, q0).unburnt.empty());
      // class key: adding a principal divisor does not change the reduction
      PLFunction f = random_pl(g, 2, rng, 2);
      Divisor moved = d + div_of_pl(g, f);
      CHECK(reduce(g, moved, q0).divisor == rf.divisor);
    }
  }
}

TEST_SUITE_END();
