#pragma once

// Metric graphs with exact rational edge lengths, points on them, and
// divisors (finite integer combinations of points).  A graph is validated on
// construction and immutable afterwards; every algorithm in the library
// treats it as a shared read-only value.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbn/errors.hpp"
#include "tbn/rational.hpp"

namespace tbn {

struct EdgeSpec {
  std::string id;
  std::string end_u;
  std::string end_v;
  Rational length;
};

class MetricGraph {
 public:
  struct Edge {
    std::string id;
    int u;  // first endpoint; offsets are measured from here
    int v;
    Rational length;
  };

  // Validates connectivity, positive lengths and endpoint references.
  MetricGraph(std::vector<std::string> vertex_names, std::vector<EdgeSpec> edge_specs)
      : vertex_names_(std::move(vertex_names)) {
    if (vertex_names_.empty())
      throw err::dangling_endpoint("graph needs at least one vertex");
    for (int i = 0; i < (int)vertex_names_.size(); ++i) {
      if (!vertex_index_.emplace(vertex_names_[i], i).second)
        throw err::dangling_endpoint("duplicate vertex name '" + vertex_names_[i] + "'");
    }
    for (auto& es : edge_specs) {
      auto iu = vertex_index_.find(es.end_u);
      auto iv = vertex_index_.find(es.end_v);
      if (iu == vertex_index_.end() || iv == vertex_index_.end())
        throw err::dangling_endpoint("edge '" + es.id + "' references unknown vertex");
      if (!(es.length > Rational(0)))
        throw err::nonpositive_length("edge '" + es.id + "' has length " + es.length.str());
      if (!edge_index_.emplace(es.id, (int)edges_.size()).second)
        throw err::dangling_endpoint("duplicate edge id '" + es.id + "'");
      edges_.push_back(Edge{es.id, iu->second, iv->second, es.length});
    }
    incident_.assign(vertex_names_.size(), {});
    for (int e = 0; e < (int)edges_.size(); ++e) {
      incident_[edges_[e].u].push_back(e);
      if (edges_[e].v != edges_[e].u) incident_[edges_[e].v].push_back(e);
    }
    // connectivity
    std::vector<char> seen(vertex_names_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : incident_[x]) {
        for (int y : {edges_[e].u, edges_[e].v}) {
          if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
        }
      }
    }
    for (size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw err::disconnected("vertex '" + vertex_names_[i] + "' unreachable");
    genus_ = (int)edges_.size() - (int)vertex_names_.size() + 1;
  }

  int num_vertices() const { return (int)vertex_names_.size(); }
  int num_edges() const { return (int)edges_.size(); }
  int genus() const { return genus_; }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  int vertex_id(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
      throw err::dangling_endpoint("unknown vertex '" + name + "'");
    return it->second;
  }
  int edge_id(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
      throw err::dangling_endpoint("unknown edge '" + id + "'");
    return it->second;
  }

  int valence(int v) const {
    int k = 0;
    for (int e : incident_[v]) k += (edges_[e].u == edges_[e].v) ? 2 : 1;
    return k;
  }

  // Index of the lexicographically first vertex name; the canonical basepoint
  // for class keys throughout the library.
  int canonical_basepoint() const {
    int best = 0;
    for (int v = 1; v < num_vertices(); ++v)
      if (vertex_names_[v] < vertex_names_[best]) best = v;
    return best;
  }

  Rational total_length() const {
    Rational t(0);
    for (auto& e : edges_) t += e.length;
    return t;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<std::vector<int>> incident_;
  int genus_ = 0;
};

// A located point.  Canonical form: offsets 0 and length collapse to the
// vertex representation, so structural equality is point equality.
struct Point {
  int vertex = -1;          // >= 0 for a vertex point
  int edge = -1;            // >= 0 for an edge-interior point
  Rational offset;          // 0 < offset < length, measured from edge.u

  bool is_vertex() const { return vertex >= 0; }

  static Point at_vertex(int v) {
    Point p;
    p.vertex = v;
    return p;
  }

  static Point on_edge(const MetricGraph& g, int e, const Rational& off) {
    const auto& ed = g.edge(e);
    if (off < Rational(0) || off > ed.length)
      throw std::out_of_range("offset " + off.str() + " outside edge '" + ed.id + "'");
    if (off.is_zero()) return at_vertex(ed.u);
    if (off == ed.length) return at_vertex(ed.v);
    Point p;
    p.edge = e;
    p.offset = off;
    return p;
  }

  friend bool operator==(const Point& a, const Point& b) {
    return a.vertex == b.vertex && a.edge == b.edge && a.offset == b.offset;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
    if (a.is_vertex()) return a.vertex < b.vertex;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.offset < b.offset;
  }
};

inline std::string point_str(const MetricGraph& g, const Point& p) {
  if (p.is_vertex()) return g.vertex_name(p.vertex);
  return g.edge(p.edge).id + ":" + p.offset.str();
}

// A direction at a point: along `edge`, with sign +1 (increasing offset) or
// -1 (decreasing).  Vertices of valence k have k directions (a loop edge
// contributes two).
struct Direction {
  int edge;
  int sign;
};

inline std::vector<Direction> directions_at(const MetricGraph& g, const Point& p) {
  std::vector<Direction> out;
  if (p.is_vertex()) {
    for (int e : g.incident_edges(p.vertex)) {
      if (g.edge(e).u == p.vertex) out.push_back({e, +1});
      if (g.edge(e).v == p.vertex) out.push_back({e, -1});
    }
  } else {
    out.push_back({p.edge, +1});
    out.push_back({p.edge, -1});
  }
  return out;
}

// Offset of p on edge e when travel along e starts there; for a vertex this
// is 0 or length depending on which end (loop edges need the sign to pick).
inline Rational offset_on_edge(const MetricGraph& g, const Point& p, const Direction& d) {
  if (!p.is_vertex()) return p.offset;
  const auto& ed = g.edge(d.edge);
  if (ed.u == ed.v) return d.sign > 0 ? Rational(0) : ed.length;
  return ed.u == p.vertex ? Rational(0) : ed.length;
}

// Divisor: finite Z-combination of points; no zero coefficients stored.
class Divisor {
 public:
  Divisor() = default;

  void add(const Point& p, long long c) {
    if (c == 0) return;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
      coeffs_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  long long coeff(const Point& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
  }

  long long degree() const {
    long long d = 0;
    for (auto& [p, c] : coeffs_) d += c;
    return d;
  }

  bool is_effective() const {
    for (auto& [p, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  bool empty() const { return coeffs_.empty(); }
  size_t support_size() const { return coeffs_.size(); }
  const std::map<Point, long long>& entries() const { return coeffs_; }

  friend Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (auto& [p, c] : b.coeffs_) r.add(p, c);
    return r;
  }
  friend Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (auto& [p, c] : b.coeffs_) r.add(p, -c);
    return r;
  }
  Divisor operator-() const {
    Divisor r;
    for (auto& [p, c] : coeffs_) r.coeffs_.emplace(p, -c);
    return r;
  }
  friend Divisor operator*(long long k, const Divisor& a) {
    Divisor r;
    if (k == 0) return r;
    for (auto& [p, c] : a.coeffs_) r.coeffs_.emplace(p, k * c);
    return r;
  }

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
  friend bool operator<(const Divisor& a, const Divisor& b) { return a.coeffs_ < b.coeffs_; }

 private:
  std::map<Point, long long> coeffs_;
};

inline std::string divisor_str(const MetricGraph& g, const Divisor& d) {
  if (d.empty()) return "0";
  std::string s;
  for (auto& [p, c] : d.entries()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + point_str(g, p);
  }
  return s;
}

// K = sum over vertices of (valence - 2) * v, of degree 2g - 2.
inline Divisor canonical_divisor(const MetricGraph& g) {
  Divisor k;
  for (int v = 0; v < g.num_vertices(); ++v) k.add(Point::at_vertex(v), g.valence(v) - 2);
  return k;
}

// --- contraction of separating edges -------------------------------------

inline bool is_bridge(const MetricGraph& g, int e) {
  const auto& ed = g.edge(e);
  if (ed.u == ed.v) return false;
  // connectivity of the graph with edge e removed, from ed.u
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{ed.u};
  seen[ed.u] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int f : g.incident_edges(x)) {
      if (f == e) continue;
      for (int y : {g.edge(f).u, g.edge(f).v})
        if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
    }
  }
  return !seen[ed.v];
}

struct Contraction {
  MetricGraph graph;
  std::vector<int> vertex_image;    // old vertex id -> new vertex id
  std::vector<int> edge_image;      // old edge id -> new edge id, or -1 if contracted

  Point map_point(const MetricGraph& old_graph, const Point& p) const {
    if (p.is_vertex()) return Point::at_vertex(vertex_image[p.vertex]);
    int ne = edge_image[p.edge];
    if (ne < 0) return Point::at_vertex(vertex_image[old_graph.edge(p.edge).u]);
    return Point::on_edge(graph, ne, p.offset);
  }
};

// Contracts every bridge.  Picard groups and ranks are unchanged; the genus
// is preserved because bridges carry no cycles.
inline Contraction contract_separating_edges(const MetricGraph& g) {
  std::vector<char> bridge(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) bridge[e] = is_bridge(g, e);

  // union-find over vertices joined by bridges
  std::vector<int> parent(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < g.num_edges(); ++e)
    if (bridge[e]) parent[find(g.edge(e).u)] = find(g.edge(e).v);

  // merged vertex keeps the lexicographically smallest member name
  std::map<int, std::string> class_name;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = find(v);
    auto it = class_name.find(r);
    if (it == class_name.end() || g.vertex_name(v) < it->second)
      class_name[r] = g.vertex_name(v);
  }
  std::vector<std::string> names;
  std::map<int, int> class_index;
  for (auto& [r, nm] : class_name) {
    class_index[r] = (int)names.size();
    names.push_back(nm);
  }
  std::vector<EdgeSpec> specs;
  std::vector<int> edge_image(g.num_edges(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (bridge[e]) continue;
    const auto& ed = g.edge(e);
    edge_image[e] = (int)specs.size();
    specs.push_back(EdgeSpec{ed.id, class_name[find(ed.u)], class_name[find(ed.v)], ed.length});
  }
  MetricGraph ng(names, specs);
  std::vector<int> vmap(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    vmap[v] = ng.vertex_id(class_name[find(v)]);
  // re-index edge images against the new graph's ids
  for (int e = 0; e < g.num_edges(); ++e)
    if (edge_image[e] >= 0) edge_image[e] = ng.edge_id(g.edge(e).id);
  return Contraction{std::move(ng), std::move(vmap), std::move(edge_image)};
}

}  // namespace tbn
