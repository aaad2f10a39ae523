#pragma once

// JSON serialization of graphs, divisors and scan results.  Rationals
// travel as "p/q" strings, bit-exact; decimal input is rejected by the
// rational parser.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tbn/brill_noether.hpp"
#include "tbn/graph.hpp"

namespace tbn {

using nlohmann::json;

inline json graph_to_json(const MetricGraph& g) {
  json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"id", e.id},
                          {"ends", {g.vertex_name(e.u), g.vertex_name(e.v)}},
                          {"length", e.length.str()}});
  }
  return j;
}

inline MetricGraph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs 'vertices' and 'edges'");
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<EdgeSpec> specs;
  for (const auto& je : j.at("edges")) {
    EdgeSpec es;
    es.id = je.at("id").get<std::string>();
    es.end_u = je.at("ends").at(0).get<std::string>();
    es.end_v = je.at("ends").at(1).get<std::string>();
    es.length = Rational::parse(je.at("length").get<std::string>());
    specs.push_back(es);
  }
  return MetricGraph(names, specs);
}

inline json divisor_to_json(const MetricGraph& g, const Divisor& d) {
  json j = json::array();
  for (auto& [p, c] : d.entries()) {
    if (p.is_vertex())
      j.push_back({{"vertex", g.vertex_name(p.vertex)}, {"coeff", c}});
    else
      j.push_back({{"edge", g.edge(p.edge).id}, {"offset", p.offset.str()}, {"coeff", c}});
  }
  return j;
}

inline Divisor divisor_from_json(const MetricGraph& g, const json& j) {
  Divisor d;
  for (const auto& je : j) {
    long long c = je.at("coeff").get<long long>();
    if (je.contains("vertex")) {
      d.add(Point::at_vertex(g.vertex_id(je.at("vertex").get<std::string>())), c);
    } else {
      int e = g.edge_id(je.at("edge").get<std::string>());
      Rational off = Rational::parse(je.at("offset").get<std::string>());
      d.add(Point::on_edge(g, e, off), c);
    }
  }
  return d;
}

inline json torus_point_to_json(const TorusPoint& t) {
  json j = json::array();
  for (const auto& c : t.coords) j.push_back(c.str());
  return j;
}

inline json scan_to_json(const MetricGraph& g, const WrdScan& s) {
  json j;
  j["r"] = s.r;
  j["d"] = s.d;
  j["q"] = s.q;
  j["classes"] = json::array();
  for (const auto& c : s.classes)
    j["classes"].push_back(
        {{"reduced", divisor_to_json(g, c.reduced)}, {"aj", torus_point_to_json(c.aj)}});
  j["adjacency"] = json::array();
  for (auto& [a, b] : s.adjacency) j["adjacency"].push_back({a, b});
  j["dim_estimate"] = s.dim_estimate;
  return j;
}

inline json certificate_to_json(const MetricGraph& g, const BnRankCertificate& c) {
  json j;
  j["r"] = c.r;
  j["d"] = c.d;
  j["q"] = c.q;
  j["rho"] = c.rho;
  if (c.witness) {
    j["mode"] = "falsified_with_witness";
    j["witness"] = divisor_to_json(g, *c.witness);
  } else {
    j["mode"] = "verified_at_resolution";
  }
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

// Point syntax used on the command line: a vertex name or "edge:offset".
inline Point parse_point(const MetricGraph& g, const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return Point::at_vertex(g.vertex_id(s));
  int e = g.edge_id(s.substr(0, colon));
  return Point::on_edge(g, e, Rational::parse(s.substr(colon + 1)));
}

}  // namespace tbn
