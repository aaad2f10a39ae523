#pragma once

// Parameterized graph families and sweeps of scan/Brill-Noether-rank results
// across them.  The "lol4-scaled" family shrinks the three single edges of a
// genus-4 loop of loops by a factor t while the pair edges stay at length 1;
// its t = 0 member is the degenerate loop of loops built as its own
// combinatorial graph (zero-length edges are not legal metric graphs).

#include "tbn/brill_noether.hpp"
#include "tbn/generators.hpp"

namespace tbn {

struct FamilySpec {
  std::string family;             // "lol4-scaled" | "lol-fixed"
  std::vector<Rational> params;   // family-specific lengths
  std::vector<Rational> ts;       // sweep values, in output order
};

inline MetricGraph instantiate_family(const FamilySpec& spec, const Rational& t) {
  if (spec.family == "lol4-scaled") {
    std::vector<Rational> base = spec.params;
    if (base.empty()) base = {Rational(5), Rational(4), Rational(3)};
    if (base.size() != 3)
      throw std::invalid_argument("lol4-scaled takes three single-edge lengths");
    if (t.sign() < 0) throw err::nonpositive_length("negative sweep parameter");
    if (t.is_zero())
      return degenerate_loop_of_loops({Rational(1), Rational(1), Rational(1)});
    return loop_of_loops(4, {t * base[0], t * base[1], t * base[2]});
  }
  if (spec.family == "lol-fixed") {
    // constant family: the same graph at every t
    std::vector<Rational> base = spec.params;
    if (base.empty()) base = {Rational(5), Rational(4), Rational(3)};
    return loop_of_loops((int)base.size() + 1, base);
  }
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

struct SweepRow {
  Rational t;
  long long num_classes;
  long long dim_estimate;
  long long rho;
};

inline std::vector<SweepRow> family_sweep(const FamilySpec& spec, long long r, long long d,
                                          long long q, const ScanOptions& opts = {}) {
  std::vector<SweepRow> rows;
  for (const auto& t : spec.ts) {
    MetricGraph g = instantiate_family(spec, t);
    WrdScan scan = scan_Wrd(g, r, d, q, opts);
    BnRankCertificate cert = bn_rank(g, r, d, q, opts);
    rows.push_back({t, (long long)scan.classes.size(), scan.dim_estimate, cert.rho});
  }
  return rows;
}

inline std::string sweep_tsv(const std::vector<SweepRow>& rows) {
  std::string out = "t\tclasses\tdim_estimate\trho\n";
  for (const auto& r : rows) {
    out += r.t.str() + "\t" + std::to_string(r.num_classes) + "\t" +
           std::to_string(r.dim_estimate) + "\t" + std::to_string(r.rho) + "\n";
  }
  return out;
}

}  // namespace tbn
