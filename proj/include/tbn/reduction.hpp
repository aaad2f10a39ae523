#pragma once

// Dhar's burning algorithm on metric graphs, q-reduced divisors, subgraph
// firing and linear-equivalence testing.
//
// The burn runs over an augmented model whose nodes are the graph vertices
// together with the support of the divisor and the basepoint; segments
// between consecutive nodes carry no chips, so fire crosses them freely and
// the metric burn coincides with a finite burn over the model.
//
// Reduction fires the unburnt set for the largest event-free time (the
// shortest burnt segment adjacent to its boundary) and repeats.  Inputs that
// are not effective away from the basepoint, and runs that exceed the step
// cap, are delegated to an exact subdivision model: lengths are scaled to
// integers, the divisor becomes a divisor on the unit-edge graph, and the
// classical finite-graph reduction (push negatives toward q, then iterate
// Dhar) runs there.  Both routes return the same divisor, which is the
// unique q-reduced representative of the class.

#include <optional>
#include <queue>

#include "tbn/graph.hpp"
#include "tbn/subgraph.hpp"

namespace tbn {

struct BurnResult {
  ClosedSubgraph unburnt;                              // empty iff q-reduced
  std::vector<std::pair<Point, int>> boundary_chips;   // point, out-degree toward burnt
};

struct ReducedForm {
  Divisor divisor;
  Point basepoint;
};

namespace detail {

struct AugModel {
  std::vector<Point> nodes;  // vertices first, then edge-interior marks
  std::map<Point, int> node_of;
  struct Seg {
    int a, b;  // nodes at lo / hi end
    int edge;
    Rational lo, hi;
  };
  std::vector<Seg> segs;
  std::vector<std::vector<int>> segs_at;

  static AugModel build(const MetricGraph& g, const std::vector<Point>& marks) {
    AugModel m;
    for (int v = 0; v < g.num_vertices(); ++v) {
      m.nodes.push_back(Point::at_vertex(v));
      m.node_of[m.nodes.back()] = v;
    }
    std::map<int, std::vector<Rational>> interior;
    for (const auto& p : marks)
      if (!p.is_vertex()) interior[p.edge].push_back(p.offset);
    for (auto& [e, offs] : interior) {
      std::sort(offs.begin(), offs.end(), [](const Rational& a, const Rational& b) { return a < b; });
      offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
      for (const auto& o : offs) {
        Point p = Point::on_edge(g, e, o);
        m.node_of[p] = (int)m.nodes.size();
        m.nodes.push_back(p);
      }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      std::vector<Rational> cuts{Rational(0)};
      auto it = interior.find(e);
      if (it != interior.end()) cuts.insert(cuts.end(), it->second.begin(), it->second.end());
      cuts.push_back(g.edge(e).length);
      for (size_t i = 1; i < cuts.size(); ++i) {
        int a = m.node_of.at(Point::on_edge(g, e, cuts[i - 1]));
        int b = m.node_of.at(Point::on_edge(g, e, cuts[i]));
        m.segs.push_back({a, b, e, cuts[i - 1], cuts[i]});
      }
    }
    m.segs_at.assign(m.nodes.size(), {});
    for (int s = 0; s < (int)m.segs.size(); ++s) {
      m.segs_at[m.segs[s].a].push_back(s);
      if (m.segs[s].b != m.segs[s].a) m.segs_at[m.segs[s].b].push_back(s);
    }
    return m;
  }
};

struct BurnState {
  AugModel model;
  std::vector<char> burnt;
  std::vector<long long> chips;
  int qnode;

  int burnt_incoming(int x) const {
    int cnt = 0;
    for (int s : model.segs_at[x]) {
      const auto& sg = model.segs[s];
      if (sg.a == sg.b) continue;
      int other = (sg.a == x) ? sg.b : sg.a;
      if (burnt[other]) ++cnt;
    }
    return cnt;
  }

  bool all_burnt() const {
    for (char b : burnt)
      if (!b) return false;
    return true;
  }
};

inline BurnState burn(const MetricGraph& g, const Divisor& d, const Point& q) {
  for (auto& [p, c] : d.entries())
    if (c < 0 && p != q)
      throw err::not_effective("divisor has " + std::to_string(c) + " at " + point_str(g, p));
  std::vector<Point> marks;
  for (auto& [p, c] : d.entries()) marks.push_back(p);
  marks.push_back(q);
  BurnState st;
  st.model = AugModel::build(g, marks);
  st.qnode = st.model.node_of.at(q);
  st.chips.assign(st.model.nodes.size(), 0);
  for (auto& [p, c] : d.entries()) st.chips[st.model.node_of.at(p)] = c;
  st.burnt.assign(st.model.nodes.size(), 0);
  st.burnt[st.qnode] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < (int)st.model.nodes.size(); ++x) {
      if (st.burnt[x]) continue;
      if (st.burnt_incoming(x) > st.chips[x]) {
        st.burnt[x] = 1;
        changed = true;
      }
    }
  }
  return st;
}

// Fires the unburnt set for the largest event-free time and returns the new
// divisor.  Precondition: some node is unburnt.
inline Divisor fire_unburnt(const MetricGraph& g, const Divisor& d, const BurnState& st) {
  const auto& m = st.model;
  std::optional<Rational> tmin;
  for (int s = 0; s < (int)m.segs.size(); ++s) {
    const auto& sg = m.segs[s];
    if (sg.a == sg.b) continue;
    bool ba = st.burnt[sg.a], bb = st.burnt[sg.b];
    if (ba == bb) continue;  // fully burnt or fully unburnt segment
    Rational len = sg.hi - sg.lo;
    if (!tmin || len < *tmin) tmin = len;
  }
  Rational t = *tmin;
  Divisor nd = d;
  for (int x = 0; x < (int)m.nodes.size(); ++x) {
    if (st.burnt[x]) continue;
    for (int s : m.segs_at[x]) {
      const auto& sg = m.segs[s];
      if (sg.a == sg.b) continue;
      int other = (sg.a == x) ? sg.b : sg.a;
      if (!st.burnt[other]) continue;
      nd.add(m.nodes[x], -1);
      Rational land = (sg.a == x) ? sg.lo + t : sg.hi - t;
      nd.add(Point::on_edge(g, sg.edge, land), +1);
    }
  }
  return nd;
}

// ---- finite-graph reduction on the subdivision model ---------------------

struct FiniteModel {
  int n = 0;
  std::vector<std::vector<int>> adj;  // parallel edges repeated; loops impossible here
  std::vector<int> dist;              // BFS distance from q

  void bfs(int q) {
    dist.assign(n, -1);
    std::queue<int> bq;
    bq.push(q);
    dist[q] = 0;
    while (!bq.empty()) {
      int x = bq.front();
      bq.pop();
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          bq.push(y);
        }
    }
  }
};

inline void finite_reduce_inplace(FiniteModel& fm, std::vector<long long>& chips, int q) {
  fm.bfs(q);
  int dmax = 0;
  for (int v = 0; v < fm.n; ++v) dmax = std::max(dmax, fm.dist[v]);
  // phase A: push negative amounts toward q, farthest vertices first
  for (int lvl = dmax; lvl >= 1; --lvl) {
    for (int v = 0; v < fm.n; ++v) {
      if (fm.dist[v] != lvl || chips[v] >= 0) continue;
      long long indeg = 0;
      for (int y : fm.adj[v])
        if (fm.dist[y] <= lvl - 1) ++indeg;
      long long rounds = (-chips[v] + indeg - 1) / indeg;
      // fire the closed ball of radius lvl-1 `rounds` times
      for (int u = 0; u < fm.n; ++u) {
        if (fm.dist[u] > lvl - 1) continue;
        for (int y : fm.adj[u]) {
          if (fm.dist[y] > lvl - 1) {
            chips[u] -= rounds;
            chips[y] += rounds;
          }
        }
      }
    }
  }
  // phase B: iterate Dhar set-firings, multiple rounds at a time
  std::vector<char> burnt(fm.n);
  std::vector<long long> cnt(fm.n);
  std::vector<int> stack;
  for (;;) {
    std::fill(burnt.begin(), burnt.end(), 0);
    std::fill(cnt.begin(), cnt.end(), 0);
    stack.assign(1, q);
    burnt[q] = 1;
    int nburnt = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : fm.adj[x]) {
        if (burnt[y]) continue;
        if (++cnt[y] > chips[y]) {
          burnt[y] = 1;
          ++nburnt;
          stack.push_back(y);
        }
      }
    }
    if (nburnt == fm.n) return;
    long long k = -1;
    for (int v = 0; v < fm.n; ++v)
      if (!burnt[v] && cnt[v] > 0) {
        long long kk = chips[v] / cnt[v];
        if (k < 0 || kk < k) k = kk;
      }
    if (k < 1) k = 1;
    for (int v = 0; v < fm.n; ++v) {
      if (burnt[v]) continue;
      chips[v] -= k * cnt[v];
      for (int y : fm.adj[v])
        if (burnt[y]) chips[y] += k;
    }
  }
}

// Scales lengths and support to integers and reduces on the unit model.
inline Divisor reduce_via_subdivision(const MetricGraph& g, const Divisor& d, const Point& q) {
  long long S = 1;
  for (const auto& e : g.edges()) S = Rational::lcmll(S, e.length.den());
  for (auto& [p, c] : d.entries())
    if (!p.is_vertex()) S = Rational::lcmll(S, p.offset.den());
  if (!q.is_vertex()) S = Rational::lcmll(S, q.offset.den());
  Rational scale(S);

  FiniteModel fm;
  fm.n = g.num_vertices();
  std::vector<std::vector<int>> edge_nodes(g.num_edges());  // interior lattice nodes per edge
  for (int e = 0; e < g.num_edges(); ++e) {
    Rational L = g.edge(e).length * scale;
    long long len = L.num();  // integer by construction
    for (long long k = 1; k < len; ++k) edge_nodes[e].push_back(fm.n++);
  }
  fm.adj.assign(fm.n, {});
  auto link = [&](int a, int b) {
    fm.adj[a].push_back(b);
    fm.adj[b].push_back(a);
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    int prev = g.edge(e).u;
    for (int node : edge_nodes[e]) {
      link(prev, node);
      prev = node;
    }
    link(prev, g.edge(e).v);
  }
  auto node_of = [&](const Point& p) -> int {
    if (p.is_vertex()) return p.vertex;
    Rational k = p.offset * scale;
    return edge_nodes[p.edge][(size_t)(k.num() - 1)];
  };
  std::vector<long long> chips(fm.n, 0);
  for (auto& [p, c] : d.entries()) chips[node_of(p)] += c;
  finite_reduce_inplace(fm, chips, node_of(q));
  Divisor out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add(Point::at_vertex(v), chips[v]);
  for (int e = 0; e < g.num_edges(); ++e)
    for (size_t k = 0; k < edge_nodes[e].size(); ++k)
      out.add(Point::on_edge(g, e, Rational((long long)k + 1, S)), chips[edge_nodes[e][k]]);
  return out;
}

}  // namespace detail

inline BurnResult dhar_burn(const MetricGraph& g, const Divisor& d, const Point& q) {
  auto st = detail::burn(g, d, q);
  BurnResult res;
  const auto& m = st.model;
  std::vector<char> covered(m.nodes.size(), 0);
  for (const auto& sg : m.segs) {
    if (!st.burnt[sg.a] && !st.burnt[sg.b]) {
      res.unburnt.add_interval(g, sg.edge, sg.lo, sg.hi);
      covered[sg.a] = covered[sg.b] = 1;
    }
  }
  for (int x = 0; x < (int)m.nodes.size(); ++x)
    if (!st.burnt[x] && !covered[x]) res.unburnt.add_point(g, m.nodes[x]);
  for (int x = 0; x < (int)m.nodes.size(); ++x) {
    if (st.burnt[x]) continue;
    int out = st.burnt_incoming(x);
    if (out > 0) res.boundary_chips.emplace_back(m.nodes[x], out);
  }
  return res;
}

struct ReduceOptions {
  long long max_metric_steps = 50000;
};

inline ReducedForm reduce(const MetricGraph& g, const Divisor& d, const Point& q,
                          const ReduceOptions& opts = {}) {
  bool effective_away = true;
  for (auto& [p, c] : d.entries())
    if (c < 0 && p != q) effective_away = false;

  if (effective_away) {
    Divisor cur = d;
    for (long long step = 0; step < opts.max_metric_steps; ++step) {
      auto st = detail::burn(g, cur, q);
      if (st.all_burnt()) return ReducedForm{cur, q};
      cur = detail::fire_unburnt(g, cur, st);
    }
    // step cap exceeded; fall through to the subdivision route on the input
  }
  Divisor red = detail::reduce_via_subdivision(g, d, q);
  return ReducedForm{red, q};
}

// d - boundary(s) + boundary(N_t(s)), exact; errors if an event (vertex or
// support-point crossing, front collision) happens strictly before t.
inline Divisor fire_subgraph(const MetricGraph& g, const Divisor& d, const ClosedSubgraph& s,
                             const Rational& t) {
  if (!(t > Rational(0))) throw std::invalid_argument("fire_subgraph: time must be positive");
  auto boundary = s.boundary(g);
  for (auto& [x, k] : boundary)
    if (d.coeff(x) < k)
      throw err::insufficient_chips(point_str(g, x) + " has " + std::to_string(d.coeff(x)) +
                                    " chips, out-degree " + std::to_string(k));
  struct Front {
    Point from;
    int edge;
    int sign;
    Rational start;  // offset on edge
  };
  std::vector<Front> fronts;
  for (auto& [x, k] : boundary) {
    for (const auto& dir : directions_at(g, x))
      if (!s.contains_direction(g, x, dir))
        fronts.push_back({x, dir.edge, dir.sign, offset_on_edge(g, x, dir)});
  }
  // per-front events: edge ends and support points
  for (const auto& f : fronts) {
    const auto& ed = g.edge(f.edge);
    Rational to_end = f.sign > 0 ? ed.length - f.start : f.start;
    if (to_end < t)
      throw err::firing_time_too_large("front on edge '" + ed.id + "' crosses a vertex");
    for (auto& [p, c] : d.entries()) {
      if (p.is_vertex() || p.edge != f.edge) continue;
      Rational delta = f.sign > 0 ? p.offset - f.start : f.start - p.offset;
      if (delta > Rational(0) && delta < t)
        throw err::firing_time_too_large("front crosses support point " + point_str(g, p));
    }
  }
  // head-on collisions
  for (size_t i = 0; i < fronts.size(); ++i) {
    for (size_t j = i + 1; j < fronts.size(); ++j) {
      const auto& a = fronts[i];
      const auto& b = fronts[j];
      if (a.edge != b.edge || a.sign == b.sign) continue;
      const Front& fwd = a.sign > 0 ? a : b;
      const Front& bwd = a.sign > 0 ? b : a;
      if (!(fwd.start < bwd.start)) continue;
      Rational gap = bwd.start - fwd.start;
      if (gap < t + t)
        throw err::firing_time_too_large("fronts collide inside edge '" + g.edge(a.edge).id + "'");
    }
  }
  Divisor nd = d;
  for (auto& [x, k] : boundary) nd.add(x, -k);
  for (const auto& f : fronts) {
    Rational land = f.sign > 0 ? f.start + t : f.start - t;
    nd.add(Point::on_edge(g, f.edge, land), +1);
  }
  return nd;
}

inline std::optional<Divisor> effective_representative(const MetricGraph& g, const Divisor& d) {
  Point q0 = Point::at_vertex(g.canonical_basepoint());
  ReducedForm r = reduce(g, d, q0);
  if (r.divisor.coeff(q0) >= 0) return r.divisor;
  return std::nullopt;
}

inline bool is_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2) {
  if (d1.degree() != d2.degree()) return false;
  Point q0 = Point::at_vertex(g.canonical_basepoint());
  return reduce(g, d1, q0).divisor == reduce(g, d2, q0).divisor;
}

}  // namespace tbn
