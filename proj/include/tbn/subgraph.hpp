#pragma once

// Closed subgraphs as finite unions of closed rational subintervals, one
// list per edge.  Degenerate intervals [x,x] are allowed, which is how an
// isolated vertex is carried (membership of a vertex is implied by interval
// endpoints reaching it).

#include <map>
#include <vector>

#include "tbn/graph.hpp"

namespace tbn {

class ClosedSubgraph {
 public:
  struct Interval {
    Rational lo, hi;  // 0 <= lo <= hi <= edge length
  };

  ClosedSubgraph() = default;

  void add_interval(const MetricGraph& g, int edge, Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo < Rational(0) || hi > g.edge(edge).length)
      throw std::out_of_range("interval outside edge '" + g.edge(edge).id + "'");
    parts_[edge].push_back({lo, hi});
    canonicalize(edge);
  }

  void add_full_edge(const MetricGraph& g, int edge) {
    add_interval(g, edge, Rational(0), g.edge(edge).length);
  }

  void add_vertex(const MetricGraph& g, int v) {
    // carried as a degenerate interval on some incident edge end
    for (int e : g.incident_edges(v)) {
      if (g.edge(e).u == v) { add_interval(g, e, Rational(0), Rational(0)); return; }
      if (g.edge(e).v == v) { add_interval(g, e, g.edge(e).length, g.edge(e).length); return; }
    }
    throw std::out_of_range("isolated vertex cannot be represented");
  }

  void add_point(const MetricGraph& g, const Point& p) {
    if (p.is_vertex()) add_vertex(g, p.vertex);
    else add_interval(g, p.edge, p.offset, p.offset);
  }

  bool empty() const { return parts_.empty(); }
  const std::map<int, std::vector<Interval>>& parts() const { return parts_; }

  bool contains(const MetricGraph& g, const Point& p) const {
    if (!p.is_vertex()) return covers(p.edge, p.offset, p.offset);
    for (int e : g.incident_edges(p.vertex)) {
      const auto& ed = g.edge(e);
      if (ed.u == p.vertex && covers(e, Rational(0), Rational(0))) return true;
      if (ed.v == p.vertex && covers(e, ed.length, ed.length)) return true;
    }
    return false;
  }

  // True iff a closed segment [p, p + eps * dir] lies in the subgraph for
  // some positive eps.
  bool contains_direction(const MetricGraph& g, const Point& p, const Direction& d) const {
    Rational off = offset_on_edge(g, p, d);
    auto it = parts_.find(d.edge);
    if (it == parts_.end()) return false;
    for (const auto& iv : it->second) {
      if (d.sign > 0 && iv.lo <= off && off < iv.hi) return true;
      if (d.sign < 0 && iv.lo < off && off <= iv.hi) return true;
    }
    return false;
  }

  // Boundary points with out-degrees: points of the subgraph with at least
  // one direction leaving it.
  std::vector<std::pair<Point, int>> boundary(const MetricGraph& g) const {
    std::map<Point, int> out;
    auto consider = [&](const Point& p) {
      if (out.count(p)) return;
      if (!contains(g, p)) return;
      int k = 0;
      for (const auto& d : directions_at(g, p))
        if (!contains_direction(g, p, d)) ++k;
      if (k > 0) out[p] = k;
    };
    for (auto& [e, ivs] : parts_) {
      for (const auto& iv : ivs) {
        consider(Point::on_edge(g, e, iv.lo));
        consider(Point::on_edge(g, e, iv.hi));
      }
    }
    return {out.begin(), out.end()};
  }

  Rational total_length() const {
    Rational t(0);
    for (auto& [e, ivs] : parts_)
      for (auto& iv : ivs) t += iv.hi - iv.lo;
    return t;
  }

  static ClosedSubgraph whole_graph(const MetricGraph& g) {
    ClosedSubgraph s;
    for (int e = 0; e < g.num_edges(); ++e) s.add_full_edge(g, e);
    return s;
  }

 private:
  bool covers(int edge, const Rational& lo, const Rational& hi) const {
    auto it = parts_.find(edge);
    if (it == parts_.end()) return false;
    for (const auto& iv : it->second)
      if (iv.lo <= lo && hi <= iv.hi) return true;
    return false;
  }

  void canonicalize(int edge) {
    auto& ivs = parts_[edge];
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> merged;
    for (const auto& iv : ivs) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
      } else {
        merged.push_back(iv);
      }
    }
    ivs = std::move(merged);
  }

  std::map<int, std::vector<Interval>> parts_;
};

}  // namespace tbn
