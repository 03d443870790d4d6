#include "leafatlas/bdtriple.hpp"

#include <algorithm>
#include <set>

#include "leafatlas/errors.hpp"

namespace leafatlas {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string alpha_name(int i) { return "alpha" + std::to_string(i + 1); }

bool supported_on(const IVec& a, const std::vector<int>& simple, int ss_rank) {
  for (int i = 0; i < int(a.size()); ++i)
    if (a[i] && (i >= ss_rank || !contains(simple, i))) return false;
  return true;
}

}  // namespace

BDTriple validate_triple(const RootSystem& rs, const std::vector<int>& gamma1, const std::vector<int>& gamma2,
                         const std::vector<std::pair<int, int>>& tau) {
  auto in_range = [&](int i) { return i >= 0 && i < rs.ss_rank; };
  BDTriple t;
  std::set<int> g1(gamma1.begin(), gamma1.end()), g2(gamma2.begin(), gamma2.end());
  for (int i : g1)
    if (!in_range(i)) throw Error(ErrorCode::InvalidInput, "gamma1 index " + std::to_string(i + 1) + " out of range");
  for (int i : g2)
    if (!in_range(i)) throw Error(ErrorCode::InvalidInput, "gamma2 index " + std::to_string(i + 1) + " out of range");
  t.gamma1.assign(g1.begin(), g1.end());
  t.gamma2.assign(g2.begin(), g2.end());
  std::set<int> image;
  for (auto [a, b] : tau) {
    if (!in_range(a) || !in_range(b)) throw Error(ErrorCode::InvalidInput, "tau index out of range");
    if (!g1.count(a)) throw Error(ErrorCode::NotBijective, "tau defined on " + alpha_name(a) + " outside gamma1");
    if (!g2.count(b)) throw Error(ErrorCode::NotBijective, "tau sends " + alpha_name(a) + " outside gamma2");
    if (t.tau.count(a)) throw Error(ErrorCode::NotBijective, "tau defined twice on " + alpha_name(a));
    if (!image.insert(b).second) throw Error(ErrorCode::NotBijective, "tau not injective at " + alpha_name(b));
    t.tau[a] = b;
  }
  if (t.tau.size() != g1.size()) throw Error(ErrorCode::NotBijective, "tau not defined on all of gamma1");
  if (image.size() != g2.size()) throw Error(ErrorCode::NotBijective, "tau not onto gamma2");
  for (int a : t.gamma1)
    for (int b : t.gamma1)
      if (rs.gram(t.tau[a], t.tau[b]) != rs.gram(a, b))
        throw Error(ErrorCode::NotIsometry, "(" + alpha_name(a) + ", " + alpha_name(b) + ") not preserved");
  for (int a : t.gamma1) {
    std::vector<int> path{a};
    int x = t.tau[a];
    int n = 1;
    while (g1.count(x)) {
      if (x == a) {
        std::string cyc;
        for (int p : path) cyc += alpha_name(p) + " -> ";
        throw Error(ErrorCode::NotNilpotent, "cycle " + cyc + alpha_name(a));
      }
      path.push_back(x);
      x = t.tau[x];
      ++n;
      if (n > int(g1.size()) + 1) throw Error(ErrorCode::NotNilpotent, "orbit of " + alpha_name(a) + " never leaves gamma1");
    }
    t.ord_tau = std::max(t.ord_tau, n);
  }
  return t;
}

BDTriple trivial_triple() { return {}; }

BDTriple cremmer_gervais(const RootSystem& rs) {
  std::vector<int> g1, g2;
  std::vector<std::pair<int, int>> tau;
  for (int j = 0; j + 1 < rs.ss_rank; ++j) {
    g1.push_back(j);
    g2.push_back(j + 1);
    tau.emplace_back(j, j + 1);
  }
  return validate_triple(rs, g1, g2, tau);
}

std::optional<IVec> tau_root(const RootSystem& rs, const BDTriple& t, const IVec& alpha) {
  if (!supported_on(alpha, t.gamma1, rs.ss_rank)) return std::nullopt;
  IVec out(alpha.size(), 0);
  for (int i = 0; i < int(alpha.size()); ++i)
    if (alpha[i]) out[t.tau.at(i)] += alpha[i];
  return out;
}

std::optional<IVec> tau_inverse_root(const RootSystem& rs, const BDTriple& t, const IVec& alpha) {
  if (!supported_on(alpha, t.gamma2, rs.ss_rank)) return std::nullopt;
  std::map<int, int> inv;
  for (auto [a, b] : t.tau) inv[b] = a;
  IVec out(alpha.size(), 0);
  for (int i = 0; i < int(alpha.size()); ++i)
    if (alpha[i]) out[inv.at(i)] += alpha[i];
  return out;
}

std::vector<std::pair<IVec, IVec>> partial_order_pairs(const RootSystem& rs, const BDTriple& t) {
  std::vector<std::pair<IVec, IVec>> out;
  for (const auto& a : rs.positive_roots) {
    IVec cur = a;
    while (auto next = tau_root(rs, t, cur)) {
      if (!rs.is_positive(*next)) throw Error(ErrorCode::InvariantViolation, "tau image is not a positive root");
      out.emplace_back(a, *next);
      cur = *next;
    }
  }
  return out;
}

QMat omega0(const RootSystem& rs) { return *inverse(rs.gram); }

namespace {

// S skew with S(i,j) = x_k for the k-th pair i < j.
std::vector<std::pair<int, int>> skew_pairs(int c) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) p.emplace_back(i, j);
  return p;
}

}  // namespace

CartanTerm solve_r0(const RootSystem& rs, const BDTriple& t, const R0Request& req) {
  int c = rs.cartan_rank;
  const QMat& g = rs.gram;
  if (req.mode == R0Mode::FromMatrix) {
    if (int(req.matrix.rows()) != c || int(req.matrix.cols()) != c)
      throw Error(ErrorCode::DimensionMismatch, "r0 must be " + std::to_string(c) + "x" + std::to_string(c));
    CartanTerm ct{req.matrix};
    if (!r0_admissible(rs, t, ct)) throw Error(ErrorCode::Infeasible, "supplied r0 violates the defining constraints");
    return ct;
  }
  auto pairs = skew_pairs(c);
  std::vector<QVec> rows;
  std::vector<Q> rhs;
  for (int a : t.gamma1) {
    QVec d(c);
    QVec s(c);
    d[a] += 1, d[t.tau.at(a)] -= 1;
    s[a] += 1, s[t.tau.at(a)] += 1;
    QVec u = g * d;
    // row i of S u = -(a + b)/2
    for (int i = 0; i < c; ++i) {
      QVec row(pairs.size());
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [p, q] = pairs[k];
        if (p == i) row[k] += u[q];
        if (q == i) row[k] -= u[p];
      }
      rows.push_back(row);
      rhs.push_back(-s[i] / 2);
    }
  }
  if (req.mode == R0Mode::MatchTheta) {
    const QMat& tm = req.matrix;
    if (int(tm.rows()) != c || int(tm.cols()) != c)
      throw Error(ErrorCode::DimensionMismatch, "target theta must be " + std::to_string(c) + "x" + std::to_string(c));
    if (tm.transpose() * g * tm != g) throw Error(ErrorCode::TargetThetaNotIsometry, "target does not preserve the form");
    QMat one_minus = QMat::identity(c) - tm;
    QMat one_plus = QMat::identity(c) + tm;
    // (1 - T) S G = -(1 + T)/2
    for (int p = 0; p < c; ++p)
      for (int q = 0; q < c; ++q) {
        QVec row(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          auto [i, j] = pairs[k];
          row[k] = one_minus(p, i) * g(j, q) - one_minus(p, j) * g(i, q);
        }
        rows.push_back(row);
        rhs.push_back(-one_plus(p, q) / 2);
      }
  }
  QMat s(c, c);
  if (!pairs.empty() && !rows.empty()) {
    auto x = solve(QMat::from_rows(rows), rhs);
    if (!x) throw Error(ErrorCode::Infeasible, "r0 constraints are inconsistent");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      s(pairs[k].first, pairs[k].second) = (*x)[k];
      s(pairs[k].second, pairs[k].first) = -(*x)[k];
    }
  } else {
    for (const Q& v : rhs)
      if (sgn(v) != 0) throw Error(ErrorCode::Infeasible, "r0 constraints are inconsistent");
  }
  CartanTerm ct{omega0(rs) * Q(1, 2) + s};
  if (!r0_admissible(rs, t, ct)) throw Error(ErrorCode::InvariantViolation, "solved r0 fails its constraints");
  return ct;
}

QMat r0_symmetric_residual(const RootSystem& rs, const CartanTerm& c) {
  return c.r0 + c.r0.transpose() - omega0(rs);
}

std::vector<QVec> r0_constraint_residuals(const RootSystem& rs, const BDTriple& t, const CartanTerm& c) {
  std::vector<QVec> out;
  int n = rs.cartan_rank;
  for (int a : t.gamma1) {
    QVec av(n), bv(n);
    av[a] = 1;
    bv[t.tau.at(a)] = 1;
    // (tau alpha (x) 1) r0 + (1 (x) alpha) r0 in t-coordinates
    QVec first = c.r0.transpose() * (rs.gram * bv);
    QVec second = c.r0 * (rs.gram * av);
    QVec res(n);
    for (int i = 0; i < n; ++i) res[i] = first[i] + second[i];
    out.push_back(res);
  }
  return out;
}

bool r0_admissible(const RootSystem& rs, const BDTriple& t, const CartanTerm& c) {
  if (!r0_symmetric_residual(rs, c).is_zero()) return false;
  for (const auto& r : r0_constraint_residuals(rs, t, c))
    for (const auto& x : r)
      if (sgn(x) != 0) return false;
  return true;
}

AbstractRMatrix assemble_r(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0) {
  AbstractRMatrix r;
  r.cartan = r0;
  r.diagonal_pairs = rs.positive_roots;
  r.wedge_pairs = partial_order_pairs(rs, t);
  return r;
}

InductionChain induction_chain(const RootSystem& rs, const BDTriple& t) {
  InductionChain chain;
  std::vector<int> ambient;
  for (int i = 0; i < rs.ss_rank; ++i) ambient.push_back(i);
  chain.steps.push_back({ambient, t});
  BDTriple cur = t;
  while (!cur.gamma1.empty()) {
    std::vector<int> g1, g2;
    std::vector<std::pair<int, int>> tau;
    for (int a : cur.gamma1)
      if (contains(cur.gamma2, a)) {
        g1.push_back(a);
        g2.push_back(cur.tau.at(a));
        tau.emplace_back(a, cur.tau.at(a));
      }
    std::vector<int> next_ambient = cur.gamma2;
    BDTriple next = validate_triple(rs, g1, g2, tau);
    if (next.ord_tau != cur.ord_tau - 1)
      throw Error(ErrorCode::InvariantViolation, "induction step did not lower ord by one");
    chain.steps.push_back({next_ambient, next});
    cur = next;
  }
  return chain;
}

std::vector<BDTriple> all_valid_triples(const RootSystem& rs) {
  std::vector<BDTriple> out;
  int n = rs.ss_rank;
  for (unsigned m1 = 0; m1 < (1u << n); ++m1)
    for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
      if (__builtin_popcount(m1) != __builtin_popcount(m2)) continue;
      std::vector<int> g1, g2;
      for (int i = 0; i < n; ++i) {
        if (m1 >> i & 1) g1.push_back(i);
        if (m2 >> i & 1) g2.push_back(i);
      }
      std::vector<int> perm = g2;
      do {
        std::vector<std::pair<int, int>> tau;
        for (std::size_t k = 0; k < g1.size(); ++k) tau.emplace_back(g1[k], perm[k]);
        try {
          out.push_back(validate_triple(rs, g1, g2, tau));
        } catch (const Error&) {
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return out;
}

}  // namespace leafatlas
