#pragma once

// Exact grid scans of Brill-Noether loci, the Brill-Noether rank with
// certificates, complete linear series enumeration, and family sweeps.
//
// A scan enumerates every effective divisor of degree d supported on the
// 1/q lattice, keeps those of rank >= r, and groups them into classes keyed
// by the reduced divisor at the canonical basepoint (the Abel-Jacobi image
// is carried as a cross-check, never as the key).  Two classes are adjacent
// when representatives differ by moving one chip one grid step; the
// dimension estimate of a class is the rank of the span of the step
// directions to its neighbours, and the scan reports the maximum.

#include <atomic>
#include <cstdlib>
#include <thread>

#include "tbn/jacobian.hpp"
#include "tbn/lattice.hpp"
#include "tbn/rank.hpp"

namespace tbn {

struct ScanOptions {
  long long budget = 0;  // 0: use TBN_BUDGET env var or the built-in default
  int jobs = 1;

  long long effective_budget() const {
    if (budget > 0) return budget;
    if (const char* env = std::getenv("TBN_BUDGET")) {
      long long b = std::atoll(env);
      if (b > 0) return b;
    }
    return 5'000'000;
  }
};

struct WrdScan {
  long long r = 0, d = 0, q = 1;
  struct ClassEntry {
    Divisor reduced;
    TorusPoint aj;
  };
  std::vector<ClassEntry> classes;
  std::vector<std::pair<int, int>> adjacency;  // class index pairs, i < j
  int dim_estimate = -1;                       // -1 when no classes found
};

struct BnRankCertificate {
  long long r = 0, d = 0, q = 1;
  long long rho = -1;
  std::optional<Divisor> witness;  // degree r + rho + 1, not dominated
  bool verified_at_resolution = true;
};

namespace detail {

struct SurvivorSet {
  Lattice lattice;
  std::vector<std::vector<int>> survivors;  // sorted point-index multisets, lex order
};

inline Divisor divisor_from_indices(const Lattice& lat, const std::vector<int>& idx) {
  Divisor d;
  for (int i : idx) d.add(lat.points[i], 1);
  return d;
}

// All effective lattice divisors of degree d with rank >= r.
inline SurvivorSet enumerate_survivors(const MetricGraph& g, long long r, long long d,
                                       long long q, const ScanOptions& opts) {
  SurvivorSet out;
  out.lattice = build_lattice(g, q);
  long long n = (long long)out.lattice.points.size();
  long long budget = opts.effective_budget();
  if (multiset_count(n, d, budget) > budget)
    throw err::budget_exceeded("lattice scan of " + std::to_string(n) + " points at degree " +
                               std::to_string(d) + " exceeds budget " + std::to_string(budget));
  RankDeterminingSet A = rank_determining_set(g);

  int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<std::vector<int>>> found((size_t)jobs);
  auto work = [&](int slot) {
    std::vector<int> idx;
    std::function<void(int, long long)> rec = [&](int start, long long remaining) {
      if (remaining == 0) {
        Divisor cand = divisor_from_indices(out.lattice, idx);
        if (rank_at_least(g, cand, r, A)) found[slot].push_back(idx);
        return;
      }
      for (int i = start; i < (int)n; ++i) {
        if (idx.empty() && i % jobs != slot) continue;  // partition by first point
        idx.push_back(i);
        rec(i, remaining - 1);
        idx.pop_back();
      }
    };
    rec(0, d);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& t : threads) t.join();
  }
  for (auto& part : found)
    out.survivors.insert(out.survivors.end(), part.begin(), part.end());
  std::sort(out.survivors.begin(), out.survivors.end());
  return out;
}

inline int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r2 = rank; r2 < rows; ++r2)
      if (!m[r2][c].is_zero()) { piv = r2; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r2 = 0; r2 < rows; ++r2) {
      if (r2 == rank || m[r2][c].is_zero()) continue;
      Rational f = m[r2][c] / m[rank][c];
      for (int c2 = c; c2 < cols; ++c2) m[r2][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline WrdScan scan_Wrd(const MetricGraph& g, long long r, long long d, long long q,
                        const ScanOptions& opts = {}) {
  auto sv = detail::enumerate_survivors(g, r, d, q, opts);
  const Lattice& lat = sv.lattice;
  Point q0 = Point::at_vertex(g.canonical_basepoint());
  JacobianBasis basis = jacobian_basis(g);
  RankDeterminingSet A = rank_determining_set(g);

  WrdScan scan;
  scan.r = r;
  scan.d = d;
  scan.q = q;

  std::map<Divisor, int> class_of_key;
  std::vector<int> survivor_class(sv.survivors.size(), -1);
  for (size_t s = 0; s < sv.survivors.size(); ++s) {
    Divisor cand = detail::divisor_from_indices(lat, sv.survivors[s]);
    Divisor key = reduce(g, cand, q0).divisor;
    auto [it, fresh] = class_of_key.emplace(key, (int)class_of_key.size());
    survivor_class[s] = it->second;
    if (fresh) {
      if (!rank_at_least(g, key, r, A))
        throw std::logic_error("class representative failed rank re-verification");
      scan.classes.push_back({key, abel_jacobi(basis, key)});
    }
  }
  // classes pairwise inequivalent by construction of the key; the Abel-Jacobi
  // image must agree with that
  for (size_t i = 0; i < scan.classes.size(); ++i)
    for (size_t j = i + 1; j < scan.classes.size(); ++j)
      if (scan.classes[i].aj == scan.classes[j].aj)
        throw std::logic_error("distinct reduced forms share an Abel-Jacobi image");

  // grid adjacency: move one chip one step and look the result up
  std::map<std::vector<int>, int> survivor_index;
  for (size_t s = 0; s < sv.survivors.size(); ++s) survivor_index[sv.survivors[s]] = (int)s;
  std::set<std::pair<int, int>> adj;
  std::vector<std::vector<std::vector<Rational>>> dirs(scan.classes.size());
  for (size_t s = 0; s < sv.survivors.size(); ++s) {
    const auto& idx = sv.survivors[s];
    for (size_t pos = 0; pos < idx.size(); ++pos) {
      if (pos > 0 && idx[pos] == idx[pos - 1]) continue;
      int p = idx[pos];
      for (int pn : lat.neighbors[p]) {
        std::vector<int> moved = idx;
        moved[pos] = pn;
        std::sort(moved.begin(), moved.end());
        auto it = survivor_index.find(moved);
        if (it == survivor_index.end()) continue;
        int ca = survivor_class[s], cb = survivor_class[it->second];
        if (ca == cb) continue;
        adj.insert({std::min(ca, cb), std::max(ca, cb)});
        // step direction in torus coordinates (scalar factor irrelevant)
        const Point& from = lat.points[p];
        const Point& to = lat.points[pn];
        int e = from.is_vertex() ? to.edge : from.edge;
        if (e < 0) {
          // vertex-to-vertex step along a full lattice interval: find the edge
          for (const auto& dd : directions_at(g, from))
            if (lat.index.at(Point::on_edge(g, dd.edge,
                                            dd.sign > 0 ? offset_on_edge(g, from, dd) + lat.step()
                                                        : offset_on_edge(g, from, dd) - lat.step())) ==
                pn) {
              e = dd.edge;
              break;
            }
        }
        dirs[ca].push_back(basis.edge_direction(e));
        dirs[cb].push_back(basis.edge_direction(e));
      }
    }
  }
  scan.adjacency.assign(adj.begin(), adj.end());
  if (!scan.classes.empty()) {
    int dim = 0;
    for (size_t c = 0; c < scan.classes.size(); ++c)
      dim = std::max(dim, detail::matrix_rank(dirs[c]));
    scan.dim_estimate = dim;
  }
  return scan;
}

// Largest rho (at this resolution) such that every effective lattice divisor
// E of degree r+rho is contained in an effective lattice divisor of degree d
// and rank >= r.  Witness candidates are enumerated distinct-support sets
// first, then multisets with repetitions, each in lexicographic point order;
// the first failure is the certificate witness.
inline BnRankCertificate bn_rank(const MetricGraph& g, long long r, long long d, long long q,
                                 const ScanOptions& opts = {}) {
  BnRankCertificate cert;
  cert.r = r;
  cert.d = d;
  cert.q = q;
  if (d < 0) {
    cert.rho = -1;
    return cert;
  }
  auto sv = detail::enumerate_survivors(g, r, d, q, opts);
  if (sv.survivors.empty()) {
    cert.rho = -1;
    return cert;
  }
  const Lattice& lat = sv.lattice;
  long long n = (long long)lat.points.size();
  // per-point postings into the survivor list
  std::vector<std::vector<int>> containing(n);
  for (size_t s = 0; s < sv.survivors.size(); ++s)
    for (size_t k = 0; k < sv.survivors[s].size(); ++k)
      if (k == 0 || sv.survivors[s][k] != sv.survivors[s][k - 1])
        containing[sv.survivors[s][k]].push_back((int)s);

  auto dominated = [&](const std::vector<int>& e_sorted) -> bool {
    const auto& cands = containing[e_sorted[0]];
    for (int s : cands) {
      const auto& sup = sv.survivors[s];
      // multiset containment: e_sorted subseteq sup
      size_t i = 0, j = 0;
      while (i < e_sorted.size() && j < sup.size()) {
        if (sup[j] == e_sorted[i]) { ++i; ++j; }
        else if (sup[j] < e_sorted[i]) ++j;
        else break;
      }
      if (i == e_sorted.size()) return true;
    }
    return false;
  };

  // enumerate level k: distinct index sets first, then true multisets
  auto find_witness = [&](long long k) -> std::optional<std::vector<int>> {
    std::vector<int> idx;
    std::optional<std::vector<int>> witness;
    std::function<bool(int, long long, bool)> rec = [&](int start, long long remaining,
                                                        bool strict) -> bool {
      if (remaining == 0) {
        bool repeats = false;
        for (size_t i = 1; i < idx.size(); ++i) repeats |= idx[i] == idx[i - 1];
        if (strict == repeats) return true;  // wrong pass for this shape
        if (!dominated(idx)) {
          witness = idx;
          return false;
        }
        return true;
      }
      for (int i = start; i < (int)n; ++i) {
        idx.push_back(i);
        if (!rec(strict ? i + 1 : i, remaining - 1, strict)) return false;
        idx.pop_back();
      }
      return true;
    };
    if (!rec(0, k, true)) return witness;   // distinct supports
    if (!rec(0, k, false)) return witness;  // with repetitions
    return std::nullopt;
  };

  long long budget = opts.effective_budget();
  // level r must hold whenever the locus is nonempty; verify rather than assume
  if (multiset_count(n, r, budget) > budget)
    throw err::budget_exceeded("bn-rank level enumeration exceeds budget");
  if (r > 0) {
    if (auto w = find_witness(r)) {
      cert.rho = -1;
      cert.witness = detail::divisor_from_indices(lat, *w);
      return cert;
    }
  }
  long long rho = 0;
  for (;;) {
    long long k = r + rho + 1;
    if (multiset_count(n, k, budget) > budget)
      throw err::budget_exceeded("bn-rank level enumeration exceeds budget");
    if (auto w = find_witness(k)) {
      cert.rho = rho;
      cert.witness = detail::divisor_from_indices(lat, *w);
      return cert;
    }
    ++rho;
    if (r + rho > d) {  // cannot happen: degree-(d+1) E is never contained
      throw std::logic_error("bn_rank failed to terminate");
    }
  }
}

// All lattice-supported effective divisors equivalent to d, sorted.
inline std::vector<Divisor> linsys_enum(const MetricGraph& g, const Divisor& d, long long q,
                                        const ScanOptions& opts = {}) {
  std::vector<Divisor> out;
  long long deg = d.degree();
  if (deg < 0) return out;
  Lattice lat = build_lattice(g, q);
  long long n = (long long)lat.points.size();
  long long budget = opts.effective_budget();
  if (multiset_count(n, deg, budget) > budget)
    throw err::budget_exceeded("linear-series enumeration exceeds budget");
  Point q0 = Point::at_vertex(g.canonical_basepoint());
  Divisor key = reduce(g, d, q0).divisor;
  std::vector<int> idx;
  std::function<void(int, long long)> rec = [&](int start, long long remaining) {
    if (remaining == 0) {
      Divisor cand = detail::divisor_from_indices(lat, idx);
      if (reduce(g, cand, q0).divisor == key) out.push_back(cand);
      return;
    }
    for (int i = start; i < (int)n; ++i) {
      idx.push_back(i);
      rec(i, remaining - 1);
      idx.pop_back();
    }
  };
  rec(0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tbn
