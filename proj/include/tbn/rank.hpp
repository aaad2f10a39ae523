#pragma once

// Baker-Norine rank via rank-determining sets.
//
// rank(D) tests divisors E supported on the set A of all vertices plus the
// midpoint of every loop edge; that set is rank determining because the open
// complement components are edge-interior intervals whose closures are
// trees, except for full loop interiors, which the midpoints cut.
//
// The test "D - E is equivalent to an effective divisor" runs greedily: for
// each point p of E in turn, reduce at p and demand multiplicity >= m there.
// The p-reduced divisor maximizes the multiplicity at p among representatives
// effective away from p, so the greedy answer equals the existential one,
// and every intermediate divisor stays effective.

#include <optional>
#include <vector>

#include "tbn/reduction.hpp"

namespace tbn {

inline long long bn_number(long long g, long long r, long long d) {
  return g - (r + 1) * (g - d + r);
}

struct RankDeterminingSet {
  std::vector<Point> points;
  enum class Provenance { vertex_closure, user_supplied } provenance;
};

inline RankDeterminingSet rank_determining_set(const MetricGraph& g) {
  RankDeterminingSet a;
  a.provenance = RankDeterminingSet::Provenance::vertex_closure;
  for (int v = 0; v < g.num_vertices(); ++v) a.points.push_back(Point::at_vertex(v));
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).u == g.edge(e).v)
      a.points.push_back(Point::on_edge(g, e, g.edge(e).length / Rational(2)));
  return a;
}

// |D - E| nonempty, for effective D and effective E given as (point, mult).
inline bool dominates(const MetricGraph& g, const Divisor& d_eff,
                      const std::vector<std::pair<Point, long long>>& e) {
  Divisor cur = d_eff;
  for (auto& [p, m] : e) {
    ReducedForm rf = reduce(g, cur, p);
    if (rf.divisor.coeff(p) < m) return false;
    cur = rf.divisor;
    cur.add(p, -m);
  }
  return true;
}

namespace detail {

// Visits all multisets of `size` points (as point/multiplicity lists) in
// lexicographic order over non-decreasing index tuples; stops early when the
// visitor returns false.
inline bool for_each_multiset(
    const std::vector<Point>& pts, int size,
    const std::function<bool(const std::vector<std::pair<Point, long long>>&)>& visit) {
  if (pts.empty()) {
    std::vector<std::pair<Point, long long>> none;
    return size == 0 ? visit(none) : true;
  }
  std::vector<int> idx;
  std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
    if (remaining == 0) {
      std::vector<std::pair<Point, long long>> e;
      for (int i : idx) {
        if (!e.empty() && e.back().first == pts[i])
          e.back().second += 1;
        else
          e.emplace_back(pts[i], 1);
      }
      return visit(e);
    }
    for (int i = start; i < (int)pts.size(); ++i) {
      idx.push_back(i);
      if (!rec(i, remaining - 1)) return false;
      idx.pop_back();
    }
    return true;
  };
  return rec(0, size);
}

}  // namespace detail

// Largest r such that every effective E of degree r supported on `a` has
// |d - E| nonempty; -1 when d itself has no effective representative.
inline long long a_rank(const MetricGraph& g, const Divisor& d, const RankDeterminingSet& a) {
  Divisor base;
  if (d.is_effective()) {
    base = d;
  } else {
    auto r0 = effective_representative(g, d);
    if (!r0) return -1;
    base = *r0;
  }
  long long r = 0;
  for (;;) {
    long long level = r + 1;
    bool all_pass = detail::for_each_multiset(
        a.points, (int)level,
        [&](const std::vector<std::pair<Point, long long>>& e) { return dominates(g, base, e); });
    if (!all_pass) return r;
    r = level;
  }
}

// True iff rank(d_any) >= r; enumerates only level r with early exit.
inline bool rank_at_least(const MetricGraph& g, const Divisor& d, long long r,
                          const RankDeterminingSet& a) {
  long long deg = d.degree();
  if (deg < 0) return r <= -1;
  if (r <= -1) return true;
  long long gen = g.genus();
  if (deg > 2 * gen - 2) return deg - gen >= r;  // Riemann-Roch forces the rank
  Divisor base;
  if (d.is_effective()) {
    base = d;
  } else {
    auto r0 = effective_representative(g, d);
    if (!r0) return false;
    base = *r0;
  }
  if (r == 0) return true;
  return detail::for_each_multiset(
      a.points, (int)r,
      [&](const std::vector<std::pair<Point, long long>>& e) { return dominates(g, base, e); });
}

inline long long rank(const MetricGraph& g, const Divisor& d) {
  long long deg = d.degree();
  if (deg < 0) return -1;
  long long gen = g.genus();
  if (deg > 2 * gen - 2) return deg - gen;
  return a_rank(g, d, rank_determining_set(g));
}

// An open subset given as a closed region with designated boundary points;
// the open set is region minus boundary.
struct OpenSetDescription {
  ClosedSubgraph region;
  std::vector<Point> boundary;
};

namespace detail {

struct Piece {
  int edge;                  // -1 for a degenerate point piece
  Rational lo, hi;
  Point plo, phi;            // canonical endpoint points
};

// Union-find over pieces glued at shared endpoints that satisfy `joinable`.
inline int count_components(const MetricGraph& g, const std::vector<Piece>& pieces,
                            const std::function<bool(const Point&)>& joinable) {
  int n = (int)pieces.size();
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::map<Point, std::vector<int>> at;
  for (int i = 0; i < n; ++i) {
    at[pieces[i].plo].push_back(i);
    at[pieces[i].phi].push_back(i);
  }
  for (auto& [p, ids] : at) {
    if (!joinable(p)) continue;
    for (size_t k = 1; k < ids.size(); ++k) uf[find(ids[0])] = find(ids[k]);
  }
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  return (int)roots.size();
}

}  // namespace detail

// Luo's criterion: the open set is special iff it is connected and every
// connected component of its complement has a point with out-degree at least
// two toward the open set.
inline bool is_special_open(const MetricGraph& g, const OpenSetDescription& u) {
  std::set<Point> bset(u.boundary.begin(), u.boundary.end());
  for (const auto& b : u.boundary)
    if (!u.region.contains(g, b))
      throw err::malformed_open_set("boundary point " + point_str(g, b) + " outside region");
  auto in_interior = [&](const Point& p) {
    return u.region.contains(g, p) && !bset.count(p);
  };

  // interior pieces: region intervals split at interior boundary points
  std::vector<detail::Piece> interior;
  for (auto& [e, ivs] : u.region.parts()) {
    for (const auto& iv : ivs) {
      std::vector<Rational> cuts{iv.lo};
      for (const auto& b : u.boundary)
        if (!b.is_vertex() && b.edge == e && iv.lo < b.offset && b.offset < iv.hi)
          cuts.push_back(b.offset);
      cuts.push_back(iv.hi);
      std::sort(cuts.begin(), cuts.end(), [](const Rational& a, const Rational& b) { return a < b; });
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (size_t i = 1; i < cuts.size(); ++i)
        interior.push_back({e, cuts[i - 1], cuts[i], Point::on_edge(g, e, cuts[i - 1]),
                            Point::on_edge(g, e, cuts[i])});
      if (cuts.size() == 1) {
        Point p = Point::on_edge(g, e, cuts[0]);
        if (in_interior(p)) interior.push_back({-1, cuts[0], cuts[0], p, p});
      }
    }
  }
  // drop pieces whose interior is empty (degenerate piece at a boundary point)
  std::vector<detail::Piece> nonempty;
  for (const auto& pc : interior)
    if (pc.edge >= 0 || in_interior(pc.plo)) nonempty.push_back(pc);
  if (nonempty.empty()) throw err::malformed_open_set("open set has empty interior");
  bool connected =
      detail::count_components(g, nonempty, [&](const Point& p) { return in_interior(p); }) == 1;
  if (!connected) return false;

  // complement pieces: per-edge gaps plus boundary points
  std::vector<detail::Piece> comp;
  for (int e = 0; e < g.num_edges(); ++e) {
    std::vector<std::pair<Rational, Rational>> gaps;
    Rational cursor(0);
    auto it = u.region.parts().find(e);
    if (it != u.region.parts().end()) {
      for (const auto& iv : it->second) {
        if (cursor < iv.lo) gaps.emplace_back(cursor, iv.lo);
        cursor = iv.hi;
      }
    }
    if (cursor < g.edge(e).length) gaps.emplace_back(cursor, g.edge(e).length);
    for (auto& [lo, hi] : gaps)
      comp.push_back({e, lo, hi, Point::on_edge(g, e, lo), Point::on_edge(g, e, hi)});
  }
  for (const auto& b : u.boundary) comp.push_back({-1, Rational(0), Rational(0), b, b});
  if (comp.empty()) return true;  // open set is the whole graph

  auto in_complement = [&](const Point& p) { return !in_interior(p); };

  // out-degree of a boundary point toward the interior
  auto outdeg = [&](const Point& p) {
    int k = 0;
    for (const auto& dir : directions_at(g, p))
      if (u.region.contains_direction(g, p, dir)) ++k;
    return k;
  };
  // find, per complement component, the best boundary out-degree
  std::vector<int> uf(comp.size());
  for (size_t i = 0; i < comp.size(); ++i) uf[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::map<Point, std::vector<int>> at;
  for (size_t i = 0; i < comp.size(); ++i) {
    at[comp[i].plo].push_back((int)i);
    at[comp[i].phi].push_back((int)i);
  }
  for (auto& [p, ids] : at) {
    if (!in_complement(p)) continue;
    for (size_t k = 1; k < ids.size(); ++k) uf[find(ids[0])] = find(ids[k]);
  }
  std::map<int, int> best;
  for (size_t i = 0; i < comp.size(); ++i) best.emplace(find((int)i), 0);
  for (const auto& b : u.boundary) {
    for (size_t i = 0; i < comp.size(); ++i) {
      bool touches = (comp[i].plo == b) || (comp[i].phi == b) ||
                     (comp[i].edge >= 0 && !b.is_vertex() && b.edge == comp[i].edge &&
                      comp[i].lo <= b.offset && b.offset <= comp[i].hi);
      if (touches) {
        int r = find((int)i);
        best[r] = std::max(best[r], outdeg(b));
      }
    }
  }
  for (auto& [root, deg] : best)
    if (deg < 2) return false;
  return true;
}

inline std::optional<std::pair<long long, long long>> non_rank_determining_witness(
    const MetricGraph& g, const RankDeterminingSet& a, const Divisor& d) {
  long long ra = a_rank(g, d, a);
  long long r = rank(g, d);
  if (ra != r) return std::make_pair(ra, r);
  return std::nullopt;
}

}  // namespace tbn
