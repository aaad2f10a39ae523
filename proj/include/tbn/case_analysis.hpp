#pragma once

// Case analysis showing that v1 + w1 + w has rank zero on a loop of loops of
// genus 4 whose single edge [v1,w1] is longest.  Each case names a vertex at
// which the (possibly fired) divisor is reduced without containing it, which
// pins the rank at zero; the firing and the reducedness check both run
// through the generic machinery, and the final rank is recomputed
// independently.  Any internal disagreement raises CaseMismatch.

#include "tbn/generators.hpp"
#include "tbn/rank.hpp"

namespace tbn {

struct W13CaseReport {
  int case_id;            // 1, 2, or 3
  Point basepoint;        // vertex whose reduced form misses it
  Divisor reduced_form;   // the divisor verified to be basepoint-reduced
  long long rank_value;   // always 0
};

// Requires the loop_of_loops(4) labeling: vertices v1..v3, w1..w3, single
// edges s1..s3 with length(s1) maximal, pair edges p1a..p3b.
inline W13CaseReport w13_case_check(const MetricGraph& g, const Point& w) {
  int s1 = g.edge_id("s1"), s2 = g.edge_id("s2"), s3 = g.edge_id("s3");
  Rational l1 = g.edge(s1).length, l2 = g.edge(s2).length, l3 = g.edge(s3).length;
  if (l1 < l2 || l1 < l3)
    throw std::invalid_argument("w13_case_check requires the [v1,w1] edge to be longest");
  int v1 = g.vertex_id("v1"), w1 = g.vertex_id("w1");
  int v2 = g.vertex_id("v2"), w2 = g.vertex_id("w2");
  int v3 = g.vertex_id("v3"), w3 = g.vertex_id("w3");

  Divisor D;
  D.add(Point::at_vertex(v1), 1);
  D.add(Point::at_vertex(w1), 1);
  D.add(w, 1);

  auto expect_reduced_missing = [&](const Divisor& div, int vtx) {
    Point base = Point::at_vertex(vtx);
    if (div.coeff(base) != 0)
      throw err::case_mismatch("divisor unexpectedly contains " + g.vertex_name(vtx));
    BurnResult burn = dhar_burn(g, div, base);
    if (!burn.unburnt.empty())
      throw err::case_mismatch("divisor is not " + g.vertex_name(vtx) + "-reduced");
  };

  W13CaseReport rep;
  int on_edge = w.is_vertex() ? -1 : w.edge;
  bool case2 = (on_edge == s2) || (w.is_vertex() && (w.vertex == v2 || w.vertex == w2));
  bool case3 = (on_edge == s3) || (w.is_vertex() && (w.vertex == v3 || w.vertex == w3));

  if (case2) {
    // fire the genus-1 subgraph between w1 and w; the chip at w lands on w2
    // and the chip at w1 retreats into [v1, w1]
    Rational off = w.is_vertex() ? (w.vertex == v2 ? Rational(0) : l2) : w.offset;
    Rational t = l2 - off;  // distance from w to w2
    Divisor fired = D;
    if (t > Rational(0)) {
      ClosedSubgraph sub;
      sub.add_full_edge(g, g.edge_id("p1a"));
      sub.add_full_edge(g, g.edge_id("p1b"));
      sub.add_interval(g, s2, Rational(0), off);
      fired = fire_subgraph(g, D, sub, t);
    }
    expect_reduced_missing(fired, v3);
    rep = {2, Point::at_vertex(v3), fired, 0};
  } else if (case3) {
    // fire the genus-1 subgraph between v1 and w; the chip at w lands on v3
    // and the chip at v1 advances into [v1, w1]
    Rational off = w.is_vertex() ? (w.vertex == v3 ? Rational(0) : l3) : w.offset;
    Rational t = off;  // distance from w to v3
    Divisor fired = D;
    if (t > Rational(0)) {
      ClosedSubgraph sub;
      sub.add_full_edge(g, g.edge_id("p3a"));
      sub.add_full_edge(g, g.edge_id("p3b"));
      sub.add_interval(g, s3, off, l3);
      fired = fire_subgraph(g, D, sub, t);
    }
    expect_reduced_missing(fired, v2);
    rep = {3, Point::at_vertex(v2), fired, 0};
  } else {
    // w on [v1, w1] or interior to a pair edge: already v2-reduced
    expect_reduced_missing(D, v2);
    rep = {1, Point::at_vertex(v2), D, 0};
  }

  long long r = rank(g, D);
  if (r != 0)
    throw err::case_mismatch("rank(v1+w1+w) = " + std::to_string(r) + ", case analysis says 0");
  rep.rank_value = r;
  return rep;
}

}  // namespace tbn
