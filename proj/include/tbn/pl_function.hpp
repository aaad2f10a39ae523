#pragma once

// Piecewise linear functions with integer slopes and their divisors.
// div(f) at a point is the sum of the outgoing slopes of f there; it is
// nonzero only at breakpoints, and always has total degree zero.

#include <map>
#include <vector>

#include "tbn/graph.hpp"

namespace tbn {

class PLFunction {
 public:
  // breakpoints per edge, ordered by offset, first at 0 and last at length
  PLFunction(const MetricGraph& g, std::map<int, std::vector<std::pair<Rational, Rational>>> bps)
      : bps_(std::move(bps)) {
    for (int e = 0; e < g.num_edges(); ++e) {
      auto it = bps_.find(e);
      if (it == bps_.end() || it->second.size() < 2)
        throw std::invalid_argument("PLFunction: edge '" + g.edge(e).id + "' needs breakpoints at both ends");
      const auto& v = it->second;
      if (!v.front().first.is_zero() || v.back().first != g.edge(e).length)
        throw std::invalid_argument("PLFunction: breakpoints must include both edge endpoints");
      for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1].first < v[i].first))
          throw std::invalid_argument("PLFunction: breakpoints must be strictly increasing");
    }
    // endpoint values must agree across edges at shared vertices
    std::vector<std::optional<Rational>> vertex_value(g.num_vertices());
    auto check = [&](int v, const Rational& val) {
      if (!vertex_value[v]) {
        vertex_value[v] = val;
      } else if (*vertex_value[v] != val) {
        throw Error("MismatchedVertexValues",
                    "PLFunction disagrees at vertex '" + g.vertex_name(v) + "'");
      }
    };
    for (int e = 0; e < g.num_edges(); ++e) {
      check(g.edge(e).u, bps_.at(e).front().second);
      check(g.edge(e).v, bps_.at(e).back().second);
    }
  }

  const std::vector<std::pair<Rational, Rational>>& on_edge(int e) const { return bps_.at(e); }

  Rational value_at(const MetricGraph& g, const Point& p) const {
    if (p.is_vertex()) {
      for (int e : g.incident_edges(p.vertex)) {
        if (g.edge(e).u == p.vertex) return bps_.at(e).front().second;
        return bps_.at(e).back().second;
      }
      throw std::logic_error("vertex with no incident edge");
    }
    const auto& v = bps_.at(p.edge);
    for (size_t i = 1; i < v.size(); ++i) {
      if (p.offset <= v[i].first) {
        Rational t = (p.offset - v[i - 1].first) / (v[i].first - v[i - 1].first);
        return v[i - 1].second + t * (v[i].second - v[i - 1].second);
      }
    }
    throw std::logic_error("offset outside edge");
  }

  std::map<int, std::vector<std::pair<Rational, Rational>>> raw() const { return bps_; }

 private:
  std::map<int, std::vector<std::pair<Rational, Rational>>> bps_;
};

// Sum of outgoing slopes at every point; slopes must be integers.
inline Divisor div_of_pl(const MetricGraph& g, const PLFunction& f) {
  std::map<Point, long long> ord;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& v = f.on_edge(e);
    std::vector<long long> slopes;
    for (size_t i = 1; i < v.size(); ++i) {
      Rational s = (v[i].second - v[i - 1].second) / (v[i].first - v[i - 1].first);
      if (!s.is_integer())
        throw err::non_integer_slope("slope " + s.str() + " on edge '" + g.edge(e).id + "'");
      slopes.push_back(s.num());
    }
    const auto& ed = g.edge(e);
    ord[Point::at_vertex(ed.u)] += slopes.front();
    ord[Point::at_vertex(ed.v)] += -slopes.back();
    for (size_t i = 1; i + 1 < v.size(); ++i)
      ord[Point::on_edge(g, e, v[i].first)] += slopes[i] - slopes[i - 1];
  }
  Divisor d;
  for (auto& [p, c] : ord) d.add(p, c);
  return d;
}

inline PLFunction pl_add(const MetricGraph& g, const PLFunction& a, const PLFunction& b) {
  std::map<int, std::vector<std::pair<Rational, Rational>>> bps;
  for (int e = 0; e < g.num_edges(); ++e) {
    std::vector<Rational> offs;
    for (auto& [o, v] : a.on_edge(e)) offs.push_back(o);
    for (auto& [o, v] : b.on_edge(e)) offs.push_back(o);
    std::sort(offs.begin(), offs.end(), [](const Rational& x, const Rational& y) { return x < y; });
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& o : offs) {
      Point p = Point::on_edge(g, e, o);
      // evaluate on this edge specifically (vertex values agree anyway)
      auto eval = [&](const PLFunction& f) {
        const auto& v = f.on_edge(e);
        for (size_t i = 1; i < v.size(); ++i)
          if (o <= v[i].first) {
            Rational t = (o - v[i - 1].first) / (v[i].first - v[i - 1].first);
            return v[i - 1].second + t * (v[i].second - v[i - 1].second);
          }
        return v.back().second;
      };
      (void)p;
      merged.emplace_back(o, eval(a) + eval(b));
    }
    bps[e] = std::move(merged);
  }
  return PLFunction(g, std::move(bps));
}

inline PLFunction pl_add_const(const MetricGraph& g, const PLFunction& a, const Rational& c) {
  auto bps = a.raw();
  for (auto& [e, v] : bps)
    for (auto& [o, val] : v) val += c;
  return PLFunction(g, std::move(bps));
}

}  // namespace tbn
