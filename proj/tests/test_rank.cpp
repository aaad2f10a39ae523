#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace tbn;
using namespace tbn::testing;

TEST_SUITE_BEGIN("rank");

TEST_CASE("Brill-Noether numbers") {
  CHECK(bn_number(4, 1, 3) == 0);
  CHECK(bn_number(7, 0, 0) == 0);
  CHECK(bn_number(3, 1, 2) == -1);
  CHECK(bn_number(4, 1, 4) == 2);
}

TEST_CASE("rank determining sets") {
  SUBCASE("loop of loops: all six vertices") {
    RankDeterminingSet a = rank_determining_set(lol4_543());
    CHECK(a.points.size() == 6);
  }
  SUBCASE("degenerate loop of loops: three vertices") {
    CHECK(rank_determining_set(gamma0()).points.size() == 3);
  }
  SUBCASE("figure eight gains the loop midpoints") {
    MetricGraph g({"v"}, {{"l1", "v", "v", Rational(2)}, {"l2", "v", "v", Rational(4)}});
    RankDeterminingSet a = rank_determining_set(g);
    REQUIRE(a.points.size() == 3);
    CHECK(a.points[1] == Point::on_edge(g, 0, Rational(1)));
    CHECK(a.points[2] == Point::on_edge(g, 1, Rational(2)));
  }
}

TEST_CASE("A-rank on the worked example (lengths 1,1,2)") {
  MetricGraph g = lol4_112();
  Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "w2"), 1}, {vertex(g, "v3"), 1}});
  RankDeterminingSet full = rank_determining_set(g);
  RankDeterminingSet pruned;
  pruned.provenance = RankDeterminingSet::Provenance::user_supplied;
  for (const auto& p : full.points)
    if (p != vertex(g, "w3")) pruned.points.push_back(p);

  CHECK(a_rank(g, d, pruned) == 1);
  CHECK(a_rank(g, d, full) == 0);
  CHECK(rank(g, d) == 0);
  CHECK(a_rank(g, Divisor{}, full) == 0);

  SUBCASE("witness that the pruned set is not rank determining") {
    auto w = non_rank_determining_witness(g, pruned, d);
    REQUIRE(w);
    CHECK(w->first == 1);
    CHECK(w->second == 0);
    CHECK(!non_rank_determining_witness(g, full, d));
    CHECK(!non_rank_determining_witness(g, full, Divisor{}));
  }
}

TEST_CASE("ranks of the headline divisors") {
  SUBCASE("v1 + w3 + w has rank 1 on lengths (5,4,3)") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v1"), 1},
                        {vertex(g, "w3"), 1},
                        {edge_point(g, "s2", Rational(3)), 1}});
    CHECK(rank(g, d) == 1);
  }
  SUBCASE("v1+v2+v3 has rank 1 on the degenerate graph") {
    MetricGraph g = gamma0();
    Divisor d = div_of({{vertex(g, "v1"), 1}, {vertex(g, "v2"), 1}, {vertex(g, "v3"), 1}});
    CHECK(rank(g, d) == 1);
  }
  SUBCASE("canonical divisor has rank g-1") {
    MetricGraph g = lol4_543();
    CHECK(rank(g, canonical_divisor(g)) == 3);
  }
  SUBCASE("negative degree") {
    MetricGraph g = lol4_543();
    CHECK(rank(g, div_of({{vertex(g, "v1"), -2}})) == -1);
  }
  SUBCASE("large degree follows Riemann-Roch directly") {
    MetricGraph g = lol4_543();
    Divisor d = div_of({{vertex(g, "v1"), 9}});
    CHECK(rank(g, d) == 9 - 4);
  }
}

TEST_CASE("special open sets") {
  SUBCASE("neighborhood of v1 bounded by w1 and w_{g-1}") {
    for (int genus : {4, 5, 6}) {
      std::vector<Rational> lens(genus - 1, Rational(1));
      lens[0] = Rational(2);
      MetricGraph g = loop_of_loops(genus, lens);
      OpenSetDescription u;
      u.region.add_full_edge(g, g.edge_id("s1"));
      std::string last = std::to_string(genus - 1);
      u.region.add_full_edge(g, g.edge_id("p" + last + "a"));
      u.region.add_full_edge(g, g.edge_id("p" + last + "b"));
      u.boundary = {vertex(g, "w1"), vertex(g, "w" + last)};
      CHECK(is_special_open(g, u));
    }
  }
  SUBCASE("open interior of a non-loop edge is not special") {
    MetricGraph g = lol4_543();
    OpenSetDescription u;
    u.region.add_full_edge(g, g.edge_id("s1"));
    u.boundary = {vertex(g, "v1"), vertex(g, "w1")};
    CHECK(!is_special_open(g, u));
  }
  SUBCASE("open interior of a loop edge is special") {
    MetricGraph g({"v"}, {{"loop", "v", "v", Rational(3)}});
    OpenSetDescription u;
    u.region.add_full_edge(g, 0);
    u.boundary = {Point::at_vertex(0)};
    CHECK(is_special_open(g, u));
  }
  SUBCASE("disconnected interior is not special") {
    MetricGraph g = lol4_543();
    OpenSetDescription u;
    u.region.add_full_edge(g, g.edge_id("s1"));
    u.region.add_full_edge(g, g.edge_id("s2"));
    u.boundary = {vertex(g, "v1"), vertex(g, "w1"), vertex(g, "v2"), vertex(g, "w2")};
    CHECK(!is_special_open(g, u));
  }
  SUBCASE("boundary point outside the region is malformed") {
    MetricGraph g = lol4_543();
    OpenSetDescription u;
    u.region.add_full_edge(g, g.edge_id("s1"));
    u.boundary = {vertex(g, "v2")};
    CHECK_THROWS_WITH_AS(is_special_open(g, u), doctest::Contains("MalformedOpenSet"), Error);
  }
}

TEST_CASE("rank invariants on random divisors") {
  Rng rng(11);
  MetricGraph g = lol4_112();
  long long gen = g.genus();
  Divisor K = canonical_divisor(g);
  Lattice lat = build_lattice(g, 2);
  for (int trial = 0; trial < 10; ++trial) {
    long long deg = rng.range(-2, 2 * gen);
    Divisor d;
    for (long long i = 0; i < deg + 2; ++i) d.add(lat.points[rng.below(lat.points.size())], 1);
    for (int i = 0; i < 2; ++i) d.add(lat.points[rng.below(lat.points.size())], -1);
    long long r = rank(g, d);
    long long rk = rank(g, K - d);
    CHECK(r - rk == d.degree() - gen + 1);  // Riemann-Roch
    if (d.degree() < 0) CHECK(r == -1);
    if (d.degree() >= 0) CHECK(r >= d.degree() - gen);
    // monotonicity under adding a point
    Divisor dp = d;
    dp.add(lat.points[rng.below(lat.points.size())], 1);
    long long rp = rank(g, dp);
    CHECK(rp >= r);
    CHECK(rp <= r + 1);
  }
}

TEST_CASE("rank is scale and class invariant") {
  Rng rng(13);
  MetricGraph g = lol4_543();
  MetricGraph g2 = loop_of_loops(4,
                                 {Rational(15, 2), Rational(6), Rational(9, 2)},
                                 {Rational(3, 2), Rational(3, 2), Rational(3, 2)});
  Lattice lat = build_lattice(g, 2);
  for (int trial = 0; trial < 6; ++trial) {
    Divisor d = random_effective(lat, 3, rng);
    Divisor scaled;
    for (auto& [p, c] : d.entries()) {
      if (p.is_vertex())
        scaled.add(Point::at_vertex(p.vertex), c);
      else
        scaled.add(Point::on_edge(g2, p.edge, p.offset * Rational(3, 2)), c);
    }
    CHECK(rank(g, d) == rank(g2, scaled));
    // class invariance
    PLFunction f = random_pl(g, 2, rng, 2);
    CHECK(rank(g, d + div_of_pl(g, f)) == rank(g, d));
  }
}

TEST_SUITE_END();
