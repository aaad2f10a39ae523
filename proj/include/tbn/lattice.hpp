#pragma once

// Rational lattices on a metric graph.  Edge lengths are scaled by the lcm S
// of their denominators to integers L_e; the lattice at denominator q is the
// set of points at offsets k/(S*q), i.e. offsets k/q on the scaled graph.
// Lattice scans are exact at their resolution: every enumerated divisor and
// every witness is an exact rational object.

#include <vector>

#include "tbn/graph.hpp"

namespace tbn {

struct Lattice {
  const MetricGraph* graph;
  long long q;              // grid denominator on the scaled graph
  long long scale;          // S, lcm of length denominators
  std::vector<Point> points;             // vertices first, then interiors by (edge, offset)
  std::map<Point, int> index;
  std::vector<std::vector<int>> neighbors;  // one grid step away

  Rational step() const { return Rational(1, scale * q); }
};

inline Lattice build_lattice(const MetricGraph& g, long long q) {
  if (q < 1) throw std::invalid_argument("lattice denominator must be >= 1");
  Lattice lat;
  lat.graph = &g;
  lat.q = q;
  long long S = 1;
  for (const auto& e : g.edges()) S = Rational::lcmll(S, e.length.den());
  lat.scale = S;
  for (int v = 0; v < g.num_vertices(); ++v) {
    lat.index[Point::at_vertex(v)] = (int)lat.points.size();
    lat.points.push_back(Point::at_vertex(v));
  }
  Rational h = lat.step();
  for (int e = 0; e < g.num_edges(); ++e) {
    Rational L = g.edge(e).length * Rational(S);
    long long n = L.num() * q;  // lattice intervals on this edge
    for (long long k = 1; k < n; ++k) {
      Point p = Point::on_edge(g, e, Rational(k) * h);
      lat.index[p] = (int)lat.points.size();
      lat.points.push_back(p);
    }
  }
  lat.neighbors.assign(lat.points.size(), {});
  for (int i = 0; i < (int)lat.points.size(); ++i) {
    const Point& p = lat.points[i];
    for (const auto& d : directions_at(g, p)) {
      Rational off = offset_on_edge(g, p, d);
      Rational land = d.sign > 0 ? off + h : off - h;
      lat.neighbors[i].push_back(lat.index.at(Point::on_edge(g, d.edge, land)));
    }
  }
  return lat;
}

// Number of multisets of size d over n points, saturating at `cap`.
inline long long multiset_count(long long n, long long d, long long cap) {
  __int128 num = 1;
  for (long long i = 0; i < d; ++i) {
    num = num * (n + i) / (i + 1);
    if (num > cap) return cap + 1;
  }
  return (long long)num;
}

}  // namespace tbn
