#pragma once

// Tropical Abel-Jacobi coordinates.
//
// A spanning tree (chosen by lexicographic edge id) gives a cycle basis
// gamma_1..gamma_g; the Gram matrix M[i][j] is the length-weighted inner
// product of basis cycles.  A point p maps to M^{-1} * <path(w -> p), .>
// reduced mod Z^g, where the pairing of a path with gamma_j integrates the
// cycle's slope along the path.  Two divisors of equal degree are linearly
// equivalent exactly when their coordinates agree.

#include <vector>

#include "tbn/graph.hpp"

namespace tbn {

struct TorusPoint {
  std::vector<Rational> coords;  // each reduced into [0,1)

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
  friend bool operator!=(const TorusPoint& a, const TorusPoint& b) { return !(a == b); }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
  }
};

namespace detail {

// Exact inverse by Gauss-Jordan elimination; throws on singular input.
inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  int n = (int)a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Gram matrix");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rational f = a[col][col];
    for (int c = 0; c < n; ++c) { a[col][c] /= f; inv[col][c] /= f; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational m = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= m * a[col][c];
        inv[r][c] -= m * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace detail

class JacobianBasis {
 public:
  JacobianBasis(const MetricGraph& g, int basepoint) : g_(&g), basepoint_(basepoint) {
    int V = g.num_vertices(), E = g.num_edges();
    // spanning tree over edges sorted by id
    std::vector<int> order(E);
    for (int e = 0; e < E; ++e) order[e] = e;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    std::vector<int> uf(V);
    for (int v = 0; v < V; ++v) uf[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    in_tree_.assign(E, 0);
    for (int e : order) {
      int a = find(g.edge(e).u), b = find(g.edge(e).v);
      if (a != b) {
        uf[a] = b;
        in_tree_[e] = 1;
      } else {
        cotree_.push_back(e);
      }
    }
    // path vectors from the basepoint through the tree
    path_.assign(V, std::vector<long long>(E, 0));
    std::vector<char> seen(V, 0);
    std::vector<int> stack{basepoint_};
    seen[basepoint_] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident_edges(x)) {
        if (!in_tree_[e]) continue;
        const auto& ed = g.edge(e);
        int y = ed.u == x ? ed.v : ed.u;
        if (seen[y]) continue;
        seen[y] = 1;
        path_[y] = path_[x];
        path_[y][e] += (ed.u == x) ? +1 : -1;
        stack.push_back(y);
      }
    }
    // basis cycles: cotree edge e (u -> v) closed up by the tree path v -> u
    int gnum = (int)cotree_.size();
    cycles_.assign(gnum, std::vector<long long>(E, 0));
    for (int i = 0; i < gnum; ++i) {
      int e = cotree_[i];
      const auto& ed = g.edge(e);
      for (int f = 0; f < E; ++f) cycles_[i][f] = path_[ed.u][f] - path_[ed.v][f];
      cycles_[i][e] += 1;
    }
    gram_.assign(gnum, std::vector<Rational>(gnum, Rational(0)));
    for (int i = 0; i < gnum; ++i)
      for (int j = 0; j < gnum; ++j) {
        Rational s(0);
        for (int f = 0; f < E; ++f)
          if (cycles_[i][f] && cycles_[j][f])
            s += g.edge(f).length * Rational(cycles_[i][f] * cycles_[j][f]);
        gram_[i][j] = s;
      }
    if (gnum > 0) gram_inv_ = detail::invert(gram_);
    // pairing vectors of the tree paths, one per vertex
    vertex_pairing_.assign(V, std::vector<Rational>(gnum, Rational(0)));
    for (int v = 0; v < V; ++v)
      for (int j = 0; j < gnum; ++j) {
        Rational s(0);
        for (int f = 0; f < E; ++f)
          if (path_[v][f] && cycles_[j][f])
            s += g.edge(f).length * Rational(path_[v][f] * cycles_[j][f]);
        vertex_pairing_[v][j] = s;
      }
  }

  int genus() const { return (int)cotree_.size(); }
  int basepoint() const { return basepoint_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  const std::vector<int>& cotree_edges() const { return cotree_; }

  // Raw coordinates of [p - basepoint] in the universal cover (not reduced).
  std::vector<Rational> lift(const Point& p) const {
    int gnum = genus();
    std::vector<Rational> pair(gnum, Rational(0));
    if (p.is_vertex()) {
      pair = vertex_pairing_[p.vertex];
    } else {
      const auto& ed = g_->edge(p.edge);
      pair = vertex_pairing_[ed.u];
      for (int j = 0; j < gnum; ++j)
        if (cycles_[j][p.edge]) pair[j] += p.offset * Rational(cycles_[j][p.edge]);
    }
    return apply_inverse(pair);
  }

  // Direction of one unit of offset along edge e, in torus coordinates.
  std::vector<Rational> edge_direction(int e) const {
    int gnum = genus();
    std::vector<Rational> pair(gnum, Rational(0));
    for (int j = 0; j < gnum; ++j) pair[j] = Rational(cycles_[j][e]);
    return apply_inverse(pair);
  }

 private:
  std::vector<Rational> apply_inverse(const std::vector<Rational>& v) const {
    int gnum = genus();
    std::vector<Rational> out(gnum, Rational(0));
    for (int i = 0; i < gnum; ++i) {
      Rational s(0);
      for (int j = 0; j < gnum; ++j)
        if (!gram_inv_[i][j].is_zero() && !v[j].is_zero()) s += gram_inv_[i][j] * v[j];
      out[i] = s;
    }
    return out;
  }

  const MetricGraph* g_;
  int basepoint_;
  std::vector<char> in_tree_;
  std::vector<int> cotree_;
  std::vector<std::vector<long long>> path_;    // vertex -> signed edge uses of tree path
  std::vector<std::vector<long long>> cycles_;  // basis cycle -> signed edge coefficients
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<Rational>> gram_inv_;
  std::vector<std::vector<Rational>> vertex_pairing_;
};

inline JacobianBasis jacobian_basis(const MetricGraph& g) {
  return JacobianBasis(g, g.canonical_basepoint());
}

// Image of a divisor under the basepointed Abel-Jacobi map, reduced mod Z^g.
// Depends only on the divisor class together with its degree.
inline TorusPoint abel_jacobi(const JacobianBasis& basis, const Divisor& d) {
  int gnum = basis.genus();
  std::vector<Rational> acc(gnum, Rational(0));
  for (auto& [p, c] : d.entries()) {
    auto lift = basis.lift(p);
    for (int i = 0; i < gnum; ++i) acc[i] += Rational(c) * lift[i];
  }
  TorusPoint t;
  t.coords.resize(gnum);
  for (int i = 0; i < gnum; ++i) t.coords[i] = acc[i].mod1();
  return t;
}

}  // namespace tbn
