#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace tbn;
using namespace tbn::testing;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(5, 4) * Rational(8, 15)) == Rational(2, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("graph validation") {
  SUBCASE("loop of loops genus 4 accepted") {
    MetricGraph g = lol4_543();
    CHECK(g.num_vertices() == 6);
    CHECK(g.num_edges() == 9);
    CHECK(g.genus() == 4);
  }
  SUBCASE("single vertex, no edges") {
    MetricGraph g({"v"}, {});
    CHECK(g.genus() == 0);
  }
  SUBCASE("zero length rejected") {
    CHECK_THROWS_WITH_AS(MetricGraph({"a", "b"}, {{"e", "a", "b", Rational(0)}}),
                         doctest::Contains("NonpositiveLength"), Error);
  }
  SUBCASE("disconnected rejected") {
    CHECK_THROWS_WITH_AS(MetricGraph({"a", "b"}, {{"e", "a", "a", Rational(1)}}),
                         doctest::Contains("Disconnected"), Error);
  }
  SUBCASE("unknown endpoint rejected") {
    CHECK_THROWS_WITH_AS(MetricGraph({"a"}, {{"e", "a", "zz", Rational(1)}}),
                         doctest::Contains("DanglingEdgeEndpoint"), Error);
  }
}

TEST_CASE("genus of the named families") {
  CHECK(gamma0().genus() == 4);
  CHECK(yu_graph().genus() == 3);
  for (int g = 3; g <= 8; ++g) {
    std::vector<Rational> lens(g - 1, Rational(1));
    CHECK(loop_of_loops(g, lens).genus() == g);
  }
  // a tree has genus 0
  MetricGraph tree({"a", "b", "c", "d", "e"}, {{"e1", "a", "b", Rational(1)},
                                               {"e2", "b", "c", Rational(1)},
                                               {"e3", "b", "d", Rational(1)},
                                               {"e4", "d", "e", Rational(1)}});
  CHECK(tree.genus() == 0);
  CHECK(chain_of_loops_default(4).genus() == 4);
  CHECK_THROWS_AS(loop_of_loops(2, {Rational(1)}), Error);
}

TEST_CASE("point canonicalization") {
  MetricGraph g = lol4_543();
  Point a = Point::on_edge(g, g.edge_id("s1"), Rational(0));
  CHECK(a == vertex(g, "v1"));
  Point b = Point::on_edge(g, g.edge_id("s1"), Rational(5));
  CHECK(b == vertex(g, "w1"));
  Point c = edge_point(g, "s1", Rational(5, 2));
  CHECK(!c.is_vertex());
  CHECK_THROWS(Point::on_edge(g, g.edge_id("s1"), Rational(6)));
}

TEST_CASE("canonical divisor") {
  SUBCASE("trivalent loop of loops: one chip per vertex") {
    MetricGraph g = lol4_543();
    Divisor k = canonical_divisor(g);
    CHECK(k.degree() == 2 * g.genus() - 2);
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(k.coeff(Point::at_vertex(v)) == 1);
  }
  SUBCASE("degenerate loop of loops: 4-valent vertices") {
    MetricGraph g = gamma0();
    Divisor k = canonical_divisor(g);
    CHECK(k.degree() == 6);
    for (int v = 0; v < 3; ++v) CHECK(k.coeff(Point::at_vertex(v)) == 2);
  }
  SUBCASE("circle graph: zero divisor") {
    MetricGraph g({"v"}, {{"loop", "v", "v", Rational(2)}});
    CHECK(canonical_divisor(g).empty());
  }
  SUBCASE("degree is 2g-2 on every generator") {
    for (const MetricGraph& g :
         {lol4_543(), gamma0(), yu_graph(), chain_of_loops_default(4)})
      CHECK(canonical_divisor(g).degree() == 2 * g.genus() - 2);
  }
}

TEST_CASE("divisor of a PL function") {
  SUBCASE("constant function has zero divisor") {
    MetricGraph g = yu_graph();
    std::map<int, std::vector<std::pair<Rational, Rational>>> bps;
    for (int e = 0; e < g.num_edges(); ++e)
      bps[e] = {{Rational(0), Rational(7)}, {g.edge(e).length, Rational(7)}};
    CHECK(div_of_pl(g, PLFunction(g, bps)).empty());
  }
  SUBCASE("tent on a circle of circumference 2") {
    MetricGraph g({"v"}, {{"loop", "v", "v", Rational(2)}});
    // peak at the antipode, slopes +1 then -1
    std::map<int, std::vector<std::pair<Rational, Rational>>> bps;
    bps[0] = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(0)}};
    Divisor d = div_of_pl(g, PLFunction(g, bps));
    CHECK(d.degree() == 0);
    CHECK(d.coeff(Point::at_vertex(0)) == 2);
    CHECK(d.coeff(Point::on_edge(g, 0, Rational(1))) == -2);
  }
  SUBCASE("non-integer slope rejected") {
    MetricGraph g({"v"}, {{"loop", "v", "v", Rational(2)}});
    std::map<int, std::vector<std::pair<Rational, Rational>>> bps;
    bps[0] = {{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}, {Rational(2), Rational(0)}};
    CHECK_THROWS_WITH_AS(div_of_pl(g, PLFunction(g, bps)), doctest::Contains("NonIntegerSlope"),
                         Error);
  }
  SUBCASE("firing function of the genus-2 subgraph on lengths (1,1,2)") {
    // f is 0 on the subgraph bounded by v1 and w2 that contains w3, and
    // drops with slope -1 across [v1,w1] and [w2,v2]
    MetricGraph g = lol4_112();
    std::map<int, std::vector<std::pair<Rational, Rational>>> bps;
    Rational zero(0), minus1(-1);
    auto flat = [&](const std::string& id, const Rational& val) {
      int e = g.edge_id(id);
      bps[e] = {{Rational(0), val}, {g.edge(e).length, val}};
    };
    int s1 = g.edge_id("s1");
    bps[s1] = {{Rational(0), zero}, {Rational(1), minus1}};  // v1 -> w1
    int s2 = g.edge_id("s2");
    bps[s2] = {{Rational(0), minus1}, {Rational(1), zero}};  // v2 -> w2
    flat("s3", zero);
    flat("p1a", minus1);
    flat("p1b", minus1);
    flat("p2a", zero);
    flat("p2b", zero);
    flat("p3a", zero);
    flat("p3b", zero);
    Divisor d = div_of_pl(g, PLFunction(g, bps));
    Divisor expect = div_of({{vertex(g, "w1"), 1},
                             {vertex(g, "v2"), 1},
                             {vertex(g, "v1"), -1},
                             {vertex(g, "w2"), -1}});
    CHECK(d == expect);
  }
  SUBCASE("additivity and constant shift") {
    MetricGraph g = lol4_112();
    Rng rng(42);
    for (int trial = 0; trial < 8; ++trial) {
      PLFunction f = random_pl(g, 2, rng);
      PLFunction h = random_pl(g, 2, rng);
      CHECK(div_of_pl(g, pl_add(g, f, h)) == div_of_pl(g, f) + div_of_pl(g, h));
      CHECK(div_of_pl(g, pl_add_const(g, f, Rational(5, 3))) == div_of_pl(g, f));
      CHECK(div_of_pl(g, f).degree() == 0);
    }
  }
}

TEST_CASE("contraction of separating edges") {
  SUBCASE("two circles joined by a bridge become a figure eight") {
    MetricGraph g({"a", "b"}, {{"ca", "a", "a", Rational(1)},
                               {"cb", "b", "b", Rational(1)},
                               {"bridge", "a", "b", Rational(3)}});
    Contraction c = contract_separating_edges(g);
    CHECK(c.graph.num_vertices() == 1);
    CHECK(c.graph.num_edges() == 2);
    CHECK(c.graph.genus() == 2);
    CHECK(g.genus() == c.graph.genus());
    // bridge interior maps to the merged vertex
    Point mid = Point::on_edge(g, g.edge_id("bridge"), Rational(3, 2));
    CHECK(c.map_point(g, mid).is_vertex());
  }
  SUBCASE("loop of loops is bridgeless") {
    MetricGraph g = lol4_543();
    Contraction c = contract_separating_edges(g);
    CHECK(c.graph.num_edges() == g.num_edges());
    CHECK(c.graph.genus() == 4);
  }
  SUBCASE("a tree contracts to a point") {
    MetricGraph tree({"a", "b", "c"}, {{"e1", "a", "b", Rational(1)}, {"e2", "b", "c", Rational(2)}});
    Contraction c = contract_separating_edges(tree);
    CHECK(c.graph.num_vertices() == 1);
    CHECK(c.graph.num_edges() == 0);
  }
  SUBCASE("idempotent") {
    MetricGraph g = chain_of_loops_default(3);  // bridges present
    Contraction c1 = contract_separating_edges(g);
    Contraction c2 = contract_separating_edges(c1.graph);
    CHECK(c2.graph.num_edges() == c1.graph.num_edges());
    CHECK(c2.graph.num_vertices() == c1.graph.num_vertices());
    CHECK(c1.graph.genus() == g.genus());
  }
}

TEST_CASE("closed subgraph boundary and out-degrees") {
  MetricGraph g = lol4_543();
  SUBCASE("pair loop bounded by v1 and w3") {
    ClosedSubgraph s;
    s.add_full_edge(g, g.edge_id("p3a"));
    s.add_full_edge(g, g.edge_id("p3b"));
    auto b = s.boundary(g);
    REQUIRE(b.size() == 2);
    CHECK(b[0].first == vertex(g, "v1"));
    CHECK(b[0].second == 1);
    CHECK(b[1].first == vertex(g, "w3"));
    CHECK(b[1].second == 1);
  }
  SUBCASE("whole graph has empty boundary") {
    CHECK(ClosedSubgraph::whole_graph(g).boundary(g).empty());
  }
  SUBCASE("interval interior boundary") {
    ClosedSubgraph s;
    s.add_interval(g, g.edge_id("s1"), Rational(1), Rational(2));
    auto b = s.boundary(g);
    REQUIRE(b.size() == 2);
    CHECK(b[0].second == 1);
    CHECK(b[1].second == 1);
  }
}

TEST_SUITE_END();
