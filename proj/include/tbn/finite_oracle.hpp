#pragma once

// Independent finite-graph implementation of reduced divisors and rank on
// the unit subdivision of a metric graph.  Ranks of divisors on a graph
// with all edge lengths 1 agree with ranks on the corresponding metric
// graph, which makes this module the brute-force oracle for the metric
// path: it shares the graph types but none of the metric Dhar code, uses no
// rank-determining shortcut, and enumerates test divisors over every
// subdivision vertex.

#include <vector>

#include "tbn/errors.hpp"
#include "tbn/graph.hpp"
#include "tbn/lattice.hpp"
#include "tbn/rank.hpp"
#include "tbn/rng.hpp"

namespace tbn {

struct FiniteGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;   // parallel edges repeated
  std::vector<Point> provenance;       // finite vertex -> metric point
  long long denominator = 1;           // lattice spacing is 1/denominator (scaled units x q)

  long long num_edges() const {
    long long m = 0;
    for (auto& a : adj) m += a.size();
    return m / 2;
  }
};

using FiniteDivisor = std::vector<long long>;

// Each edge of the metric graph, after scaling lengths to integers, becomes
// a path of length*q unit edges.  Lattice points map to subdivision
// vertices.
inline FiniteGraph subdivide(const MetricGraph& g, long long q) {
  if (q < 1) throw err::incompatible_denominator("subdivision denominator must be >= 1");
  long long S = 1;
  for (const auto& e : g.edges()) S = Rational::lcmll(S, e.length.den());
  FiniteGraph fg;
  fg.denominator = S * q;
  fg.n = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) fg.provenance.push_back(Point::at_vertex(v));
  std::vector<std::vector<int>> interior(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    Rational L = g.edge(e).length * Rational(S);
    long long units = L.num() * q;
    for (long long k = 1; k < units; ++k) {
      interior[e].push_back(fg.n++);
      fg.provenance.push_back(Point::on_edge(g, e, Rational(k, S * q)));
    }
  }
  fg.adj.assign(fg.n, {});
  auto link = [&](int a, int b) {
    fg.adj[a].push_back(b);
    fg.adj[b].push_back(a);
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    int prev = g.edge(e).u;
    for (int node : interior[e]) {
      link(prev, node);
      prev = node;
    }
    link(prev, g.edge(e).v);
  }
  return fg;
}

// Metric point -> subdivision vertex; IncompatibleDenominator when the point
// is off the lattice.
inline int finite_node(const FiniteGraph& fg, const MetricGraph& g, const Point& p) {
  if (p.is_vertex()) return p.vertex;
  Rational pos = p.offset * Rational(fg.denominator);
  if (!pos.is_integer())
    throw err::incompatible_denominator("point " + point_str(g, p) + " is off the 1/" +
                                        std::to_string(fg.denominator) + " lattice");
  // interior nodes of an edge are consecutive in creation order; recover by
  // scanning provenance lazily (graphs here are small)
  for (int v = g.num_vertices(); v < fg.n; ++v)
    if (fg.provenance[v] == p) return v;
  throw err::incompatible_denominator("point " + point_str(g, p) + " not on the lattice");
}

inline FiniteDivisor to_finite(const FiniteGraph& fg, const MetricGraph& g, const Divisor& d) {
  FiniteDivisor fd(fg.n, 0);
  for (auto& [p, c] : d.entries()) fd[finite_node(fg, g, p)] += c;
  return fd;
}

inline Divisor from_finite(const FiniteGraph& fg, const MetricGraph& g, const FiniteDivisor& fd) {
  Divisor d;
  for (int v = 0; v < fg.n; ++v)
    if (fd[v] != 0) d.add(fg.provenance[v], fd[v]);
  (void)g;
  return d;
}

// The unique q-reduced representative: phase A pushes negative amounts
// toward q by firing distance balls, phase B iterates Dhar set-firings.
inline FiniteDivisor finite_reduce(const FiniteGraph& fg, FiniteDivisor chips, int q) {
  // BFS distances from q
  std::vector<int> dist(fg.n, -1);
  std::vector<int> queue{q};
  dist[q] = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    for (int y : fg.adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  int dmax = 0;
  for (int v = 0; v < fg.n; ++v) dmax = std::max(dmax, dist[v]);
  for (int lvl = dmax; lvl >= 1; --lvl) {
    for (int v = 0; v < fg.n; ++v) {
      if (dist[v] != lvl || chips[v] >= 0) continue;
      long long indeg = 0;
      for (int y : fg.adj[v])
        if (dist[y] < lvl) ++indeg;
      long long rounds = (-chips[v] + indeg - 1) / indeg;
      for (int u = 0; u < fg.n; ++u) {
        if (dist[u] >= lvl) continue;
        for (int y : fg.adj[u])
          if (dist[y] >= lvl) {
            chips[u] -= rounds;
            chips[y] += rounds;
          }
      }
    }
  }
  std::vector<char> burnt(fg.n);
  std::vector<long long> cnt(fg.n);
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
      for (int y : fg.adj[x]) {
        if (burnt[y]) continue;
        if (++cnt[y] > chips[y]) {
          burnt[y] = 1;
          ++nburnt;
          stack.push_back(y);
        }
      }
    }
    if (nburnt == fg.n) return chips;
    // fire the unburnt set as many times as chips allow in one go
    long long k = -1;
    for (int v = 0; v < fg.n; ++v)
      if (!burnt[v] && cnt[v] > 0) {
        long long kk = chips[v] / cnt[v];
        if (k < 0 || kk < k) k = kk;
      }
    if (k < 1) k = 1;
    for (int v = 0; v < fg.n; ++v) {
      if (burnt[v]) continue;
      chips[v] -= k * cnt[v];
      for (int y : fg.adj[v])
        if (burnt[y]) chips[y] += k;
    }
  }
}

// Baker-Norine rank by exhaustive enumeration of effective E over all
// subdivision vertices.  Deliberately shortcut-free.
inline long long finite_rank(const FiniteGraph& fg, const FiniteDivisor& d,
                             long long budget = 50'000'000) {
  long long deg = 0;
  for (long long c : d) deg += c;
  if (deg < 0) return -1;

  auto representable = [&](FiniteDivisor x) {
    FiniteDivisor red = finite_reduce(fg, std::move(x), 0);
    return red[0] >= 0;
  };
  if (!representable(d)) return -1;

  long long work = 0;
  long long r = 0;
  for (;;) {
    long long level = r + 1;
    // all multisets of `level` vertices
    std::vector<int> idx;
    bool failed = false;
    std::function<void(int, long long)> rec = [&](int start, long long remaining) {
      if (failed) return;
      if (remaining == 0) {
        if (++work > budget) throw err::budget_exceeded("finite_rank enumeration budget");
        FiniteDivisor x = d;
        for (int i : idx) x[i] -= 1;
        if (!representable(std::move(x))) failed = true;
        return;
      }
      for (int i = start; i < fg.n && !failed; ++i) {
        idx.push_back(i);
        rec(i, remaining - 1);
        idx.pop_back();
      }
    };
    rec(0, level);
    if (failed) return r;
    r = level;
  }
}

// True iff the metric rank equals the finite-graph rank of the image of d
// on the 1/q subdivision.
inline bool cross_check(const MetricGraph& g, const Divisor& d, long long q) {
  FiniteGraph fg = subdivide(g, q);
  long long oracle = finite_rank(fg, to_finite(fg, g, d));
  long long metric = rank(g, d);
  return oracle == metric;
}

// A random lattice divisor of the given degree: `extra` coefficient mass is
// spread as +/-1 pairs so supports and signs vary.
inline Divisor random_lattice_divisor(const Lattice& lat, long long degree, int extra, Rng& rng) {
  Divisor d;
  for (long long i = 0; i < degree; ++i)
    d.add(lat.points[rng.below(lat.points.size())], 1);
  for (int i = 0; i < extra; ++i) {
    d.add(lat.points[rng.below(lat.points.size())], 1);
    d.add(lat.points[rng.below(lat.points.size())], -1);
  }
  return d;
}

struct CrossCheckReport {
  long long trials = 0;
  long long failures = 0;
  std::vector<Divisor> failing;
};

// Randomized oracle-equivalence run over lattice divisors of degree in
// [deg_lo, deg_hi].
inline CrossCheckReport run_cross_check(const MetricGraph& g, long long q, long long trials,
                                        uint64_t seed, long long deg_lo = -2,
                                        long long deg_hi = 5) {
  CrossCheckReport rep;
  Lattice lat = build_lattice(g, q);
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    long long deg = rng.range(deg_lo, deg_hi);
    int extra = (int)rng.below(3);
    Divisor d = random_lattice_divisor(lat, std::max<long long>(deg, 0), extra, rng);
    if (deg < 0) {
      Divisor neg;
      for (long long i = 0; i < -deg; ++i) neg.add(lat.points[rng.below(lat.points.size())], 1);
      d = d - neg;
    }
    ++rep.trials;
    if (!cross_check(g, d, q)) {
      ++rep.failures;
      rep.failing.push_back(d);
    }
  }
  return rep;
}

}  // namespace tbn
