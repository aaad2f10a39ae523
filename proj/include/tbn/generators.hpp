#pragma once

// Named graph families used throughout the test-suite and CLI.
//
// loop_of_loops(g): trivalent, vertices v1,w1,...,v_{g-1},w_{g-1}; a single
// edge s_i = [v_i, w_i] of the given length, a pair of edges joining w_i to
// v_{i+1}, and a pair joining w_{g-1} back to v1.  Pair edges default to
// length 1.
//
// degenerate_loop_of_loops: three vertices, each pair of distinct vertices
// joined by two parallel edges (genus 4); the limit of the scaled family as
// the single edges shrink to zero.
//
// yu_graph: genus 3, vertices v0,v1,w0,w1, single edges [v0,v1] and [w0,w1],
// doubled edges [v_i, w_i], all lengths 1.
//
// chain_of_loops: g two-edge loops l_i = (La_i, Lb_i) between p_i and q_i,
// consecutive loops joined by a bridge [q_i, p_{i+1}].

#include <string>
#include <vector>

#include "tbn/graph.hpp"

namespace tbn {

inline MetricGraph loop_of_loops(int g, std::vector<Rational> single_lengths,
                                 std::vector<Rational> pair_lengths = {}) {
  if (g < 3) throw err::bad_genus("loop_of_loops needs genus >= 3, got " + std::to_string(g));
  if ((int)single_lengths.size() != g - 1)
    throw err::bad_genus("loop_of_loops genus " + std::to_string(g) + " needs " +
                         std::to_string(g - 1) + " single-edge lengths");
  if (pair_lengths.empty()) pair_lengths.assign(g - 1, Rational(1));
  if ((int)pair_lengths.size() != g - 1)
    throw err::bad_genus("need one pair length per loop");
  std::vector<std::string> names;
  for (int i = 1; i <= g - 1; ++i) {
    names.push_back("v" + std::to_string(i));
    names.push_back("w" + std::to_string(i));
  }
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= g - 1; ++i) {
    std::string vi = "v" + std::to_string(i), wi = "w" + std::to_string(i);
    es.push_back({"s" + std::to_string(i), vi, wi, single_lengths[i - 1]});
  }
  for (int i = 1; i <= g - 1; ++i) {
    std::string wi = "w" + std::to_string(i);
    std::string vn = "v" + std::to_string(i == g - 1 ? 1 : i + 1);
    es.push_back({"p" + std::to_string(i) + "a", wi, vn, pair_lengths[i - 1]});
    es.push_back({"p" + std::to_string(i) + "b", wi, vn, pair_lengths[i - 1]});
  }
  return MetricGraph(names, es);
}

inline MetricGraph degenerate_loop_of_loops(std::vector<Rational> pair_lengths) {
  if (pair_lengths.size() != 3)
    throw err::bad_genus("degenerate_loop_of_loops needs exactly 3 pair lengths");
  std::vector<std::string> names{"v1", "v2", "v3"};
  std::vector<EdgeSpec> es;
  const char* ends[3][2] = {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}};
  for (int i = 0; i < 3; ++i) {
    es.push_back({"p" + std::to_string(i + 1) + "a", ends[i][0], ends[i][1], pair_lengths[i]});
    es.push_back({"p" + std::to_string(i + 1) + "b", ends[i][0], ends[i][1], pair_lengths[i]});
  }
  return MetricGraph(names, es);
}

inline MetricGraph yu_graph() {
  std::vector<std::string> names{"v0", "v1", "w0", "w1"};
  Rational one(1);
  std::vector<EdgeSpec> es{
      {"top", "v0", "v1", one},    {"bottom", "w0", "w1", one},
      {"la", "v0", "w0", one},     {"lb", "v0", "w0", one},
      {"ra", "v1", "w1", one},     {"rb", "v1", "w1", one},
  };
  return MetricGraph(names, es);
}

// arc_lengths: 2g values (top, bottom per loop); bridge_lengths: g-1 values.
inline MetricGraph chain_of_loops(int g, std::vector<Rational> arc_lengths,
                                  std::vector<Rational> bridge_lengths) {
  if (g < 1) throw err::bad_genus("chain_of_loops needs genus >= 1");
  if ((int)arc_lengths.size() != 2 * g)
    throw err::bad_genus("chain_of_loops genus " + std::to_string(g) + " needs 2g arc lengths");
  if ((int)bridge_lengths.size() != g - 1)
    throw err::bad_genus("chain_of_loops needs g-1 bridge lengths");
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) {
    names.push_back("p" + std::to_string(i));
    names.push_back("q" + std::to_string(i));
  }
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= g; ++i) {
    std::string pi = "p" + std::to_string(i), qi = "q" + std::to_string(i);
    es.push_back({"La" + std::to_string(i), pi, qi, arc_lengths[2 * (i - 1)]});
    es.push_back({"Lb" + std::to_string(i), pi, qi, arc_lengths[2 * (i - 1) + 1]});
  }
  for (int i = 1; i < g; ++i)
    es.push_back({"br" + std::to_string(i), "q" + std::to_string(i), "p" + std::to_string(i + 1),
                  bridge_lengths[i - 1]});
  return MetricGraph(names, es);
}

// Default chain used by the tests: arcs (3,4) on every loop, unit bridges.
// Each loop's attachment points then differ by an element of order 7 in
// R/7Z, large enough that no unexpected special divisors appear at genus 4.
inline MetricGraph chain_of_loops_default(int g) {
  std::vector<Rational> arcs;
  for (int i = 0; i < g; ++i) {
    arcs.push_back(Rational(3));
    arcs.push_back(Rational(4));
  }
  return chain_of_loops(g, arcs, std::vector<Rational>(g - 1, Rational(1)));
}

}  // namespace tbn
