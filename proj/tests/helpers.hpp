#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "leafatlas/bdtriple.hpp"
#include "leafatlas/leafclass.hpp"
#include "leafatlas/linalg.hpp"
#include "leafatlas/rootsys.hpp"
#include "leafatlas/weyl.hpp"

namespace testutil {

using namespace leafatlas;

inline QMat random_int_matrix(std::mt19937& rng, int rows, int cols, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline QMat random_rational_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      m(i, j) = Q(num(rng)) / den(rng);
    }
  return m;
}

inline QMat random_invertible(std::mt19937& rng, int n) {
  for (;;) {
    QMat m = random_rational_matrix(rng, n, n);
    if (det(m) != 0) return m;
  }
}

// Cofactor expansion, independent of the elimination code.
inline Q cofactor_det(const QMat& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Q s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    QMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Q term = m(0, j) * cofactor_det(minor);
    s += (j % 2 ? -term : term);
  }
  return s;
}

inline std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Cremmer-Gervais triple on A_n, 0-based: alpha_j -> alpha_{j+1}.
inline BDTriple cg_triple(const RootSystem& rs) {
  int n = rs.ss_rank;
  std::vector<int> g1, g2;
  std::vector<std::pair<int, int>> tau;
  for (int j = 0; j + 1 < n; ++j) {
    g1.push_back(j);
    g2.push_back(j + 1);
    tau.emplace_back(j, j + 1);
  }
  return validate_triple(rs, g1, g2, tau);
}

inline std::set<IMat> element_set(const std::vector<WeylElement>& v) {
  std::set<IMat> s;
  for (const auto& x : v) s.insert(x.m);
  return s;
}

inline int positive_to_negative(const RootSystem& rs, const IMat& m) {
  int c = 0;
  for (const auto& a : rs.positive_roots)
    if (!rs.is_positive(m * a)) ++c;
  return c;
}

// Shortest element of each double coset, found by brute-force coset enumeration.
inline std::set<IMat> shortest_in_cosets(const WeylGroup& w, const Parabolic& left, const Parabolic& right) {
  const auto& wl = w.elements(left);
  const auto& wr = w.elements(right);
  std::set<IMat> seen, reps;
  for (const auto& x : w.all()) {
    if (seen.count(x.m)) continue;
    WeylElement best = x;
    for (const auto& a : wl)
      for (const auto& b : wr) {
        WeylElement y = w.make(a.m * x.m * b.m);
        seen.insert(y.m);
        if (y.length < best.length) best = y;
      }
    reps.insert(best.m);
  }
  return reps;
}

// Order of Z^n / (Z^n cap B Z^n) and the number of elements killed by each d, by closing
// the columns of B^{-1} in (Q/Z)^n.
struct BruteGroup {
  std::size_t order = 0;
  std::map<int, std::size_t> killed;
};
inline BruteGroup brute_quotient(const QMat& b) {
  std::size_t n = b.rows();
  QMat binv = *inverse(b);
  auto reduce = [](QVec v) {
    for (auto& x : v) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    return v;
  };
  std::set<QVec> seen{QVec(n)};
  std::vector<QVec> todo{QVec(n)};
  while (!todo.empty()) {
    QVec cur = todo.back();
    todo.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      QVec next = cur;
      for (std::size_t i = 0; i < n; ++i) next[i] += binv(i, j);
      next = reduce(next);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  BruteGroup g;
  g.order = seen.size();
  for (int d = 1; d <= 12; ++d) {
    std::size_t c = 0;
    for (const auto& x : seen) {
      bool zero = true;
      for (const auto& e : x)
        if (Q(e * d).get_den() != 1) zero = false;
      if (zero) ++c;
    }
    g.killed[d] = c;
  }
  return g;
}

inline std::size_t killed_by(const FiniteAbelianGroup& g, int d) {
  std::size_t c = 1;
  for (const auto& f : g.invariant_factors) {
    mpz_class gc;
    mpz_class dd = d;
    mpz_gcd(gc.get_mpz_t(), dd.get_mpz_t(), f.get_mpz_t());
    c *= gc.get_ui();
  }
  return c;
}

}  // namespace testutil
