#include "leafatlas/leafclass.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leafatlas/errors.hpp"

namespace leafatlas {

std::string DimExpr::str(const std::string& symbol) const {
  std::ostringstream out;
  out << constant;
  if (d_orb_coeff == 1) out << " + " << symbol;
  else if (d_orb_coeff != 0) out << " + " << d_orb_coeff << "*" << symbol;
  return out.str();
}

Z FiniteAbelianGroup::order() const {
  if (free_rank) return 0;
  Z o = 1;
  for (const auto& f : invariant_factors) o *= f;
  return o;
}

std::string FiniteAbelianGroup::str() const {
  std::string s;
  for (const auto& f : invariant_factors) s += (s.empty() ? "" : " x ") + ("Z" + f.get_str());
  for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " x ") + std::string("Z");
  return s.empty() ? "0" : s;
}

namespace {

QMat roots_as_columns(const RootSystem& rs, const std::vector<IVec>& roots) {
  std::vector<QVec> cols;
  for (const auto& r : roots) cols.push_back(to_q(r));
  return QMat::from_columns(cols, rs.cartan_rank);
}

int root_span_rank(const RootSystem& rs, const std::vector<IVec>& roots) {
  return roots.empty() ? 0 : int(rank(roots_as_columns(rs, roots)));
}

QMat common_zeros(const RootSystem& rs, const std::vector<IVec>& roots) {
  if (roots.empty()) return QMat::identity(rs.cartan_rank);
  return nullspace(root_functionals(rs, roots));
}

QMat act(const WeylElement& w, const QMat& m) {
  if (m.cols() == 0) return m;
  return w.m.to_q() * m;
}

void require_min_rep(const WeylGroup& w, const WeylElement& v, const std::vector<int>& right, const char* what) {
  const auto& rs = w.root_system();
  for (int j : right)
    if (!w.sends_positive(v.m, rs.simple_roots[j]))
      throw Error(ErrorCode::NotMinimalRep, std::string(what) + " is not minimal in its coset mod W_" +
                                                (what[1] == '2' ? "2" : "1"));
}

void require_simple_generated(const RootSystem& rs, const std::vector<IVec>& roots) {
  std::set<IVec> in(roots.begin(), roots.end());
  for (const auto& r : roots)
    for (int i : rs.support(r))
      if (!in.count(rs.simple_roots[i]))
        throw Error(ErrorCode::InvariantViolation, "stable subalgebra is not generated by simple roots");
}

void fill_sizes(const RootSystem& rs, StableSubalgebra& s) {
  int rk = root_span_rank(rs, s.root_set);
  s.dim = rs.cartan_rank + int(s.root_set.size());
  s.derived_dim = int(s.root_set.size()) + rk;
  s.center_dim = rs.cartan_rank - rk;
}

}  // namespace

StableSubalgebra stable_subalgebra_v(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                     const WeylElement& v) {
  require_min_rep(w, v, d.triple.gamma1, "v");
  WeylElement vinv = w.inverse(v);
  std::set<IVec> cur(d.levi1_roots.begin(), d.levi1_roots.end());
  while (true) {
    std::set<IVec> next;
    for (const auto& a : cur)
      if (cur.count(v.m * a) && cur.count(vinv.m * a)) next.insert(a);
    if (next == cur) break;
    cur = next;
  }
  StableSubalgebra s;
  for (const auto& r : rs.roots)
    if (cur.count(r)) s.root_set.push_back(r);
  require_simple_generated(rs, s.root_set);
  fill_sizes(rs, s);
  s.lv_center = span_intersect(d.theta_domain, common_zeros(rs, s.root_set));
  QMat vm1 = v.m.to_q() - QMat::identity(rs.cartan_rank);
  QMat moved = s.lv_center.cols() ? vm1 * s.lv_center : empty_span(rs.cartan_rank);
  s.cong_dim = int(rank(moved));
  QMat prod = span_sum(span_sum(moved, d.h_ort1), act(v, d.h_ort1));
  s.moduli_dim = s.center_dim - int(prod.cols());
  return s;
}

LeafRecord gminus_record(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const WeylElement& v) {
  LeafRecord rec;
  rec.v = {v};
  rec.stable = stable_subalgebra_v(rs, w, d, v);
  const auto& s = rec.stable;
  rec.length = v.length;
  rec.dim_lv = int(d.triple.gamma1.size() + d.a1.cols() + s.root_set.size());
  QMat vm1 = v.m.to_q() - QMat::identity(rs.cartan_rank);
  QMat moved = s.lv_center.cols() ? vm1 * s.lv_center : empty_span(rs.cartan_rank);
  rec.cong_product_dim = int(span_sum(span_sum(moved, d.h_ort1), act(v, d.h_ort1)).cols());
  rec.orbit_dim_max = int(s.root_set.size());
  int hort = int(d.h_ort1.cols());
  int coeff = rec.orbit_dim_max > 0 ? 1 : 0;
  long leaf = long(d.dim_l1a1) - rec.dim_lv - hort + v.length + rec.cong_product_dim;
  rec.leaf_dim = {leaf, coeff};
  rec.coset_dim = {leaf + d.dim_gplus, coeff};
  if (full_h_predicate(d))
    rec.simplified_leaf_dim = DimExpr{long(d.levi1_roots.size()) - long(s.root_set.size()) + v.length, 1};
  return rec;
}

std::vector<LeafRecord> classify_gminus(const RootSystem& rs, const WeylGroup& w, const Decomposition& d) {
  std::vector<LeafRecord> out;
  for (const auto& v : minimal_coset_reps(w, {}, d.triple.gamma1)) out.push_back(gminus_record(rs, w, d, v));
  return out;
}

StableSubalgebra stable_subalgebra_pair(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                        const WeylElement& v1, const WeylElement& v2) {
  require_min_rep(w, v1, d.triple.gamma1, "v1");
  require_min_rep(w, v2, d.triple.gamma2, "v2");
  const BDTriple& t = d.triple;
  WeylElement v1inv = w.inverse(v1), v2inv = w.inverse(v2);
  std::set<IVec> l1(d.levi1_roots.begin(), d.levi1_roots.end());
  std::set<IVec> l2(d.levi2_roots.begin(), d.levi2_roots.end());
  auto psi = [&](const IVec& a) -> std::optional<IVec> {
    auto ta = tau_root(rs, t, a);
    if (!ta) return std::nullopt;
    IVec b = v2.m * *ta;
    if (!l2.count(b)) return std::nullopt;
    return v1.m * *tau_inverse_root(rs, t, b);
  };
  auto psi_inv = [&](const IVec& a) -> std::optional<IVec> {
    IVec b = v1inv.m * a;
    if (!l1.count(b)) return std::nullopt;
    IVec c = v2inv.m * *tau_root(rs, t, b);
    auto back = tau_inverse_root(rs, t, c);
    if (!back || !l1.count(*back)) return std::nullopt;
    return back;
  };
  std::set<IVec> cur = l1;
  while (true) {
    std::set<IVec> next;
    for (const auto& a : cur) {
      auto f = psi(a), b = psi_inv(a);
      if (f && b && cur.count(*f) && cur.count(*b)) next.insert(a);
    }
    if (next == cur) break;
    cur = next;
  }
  StableSubalgebra s;
  for (const auto& r : rs.roots)
    if (cur.count(r)) {
      s.root_set.push_back(r);
      s.partner_roots.push_back(v2.m * *tau_root(rs, t, r));
    }
  require_simple_generated(rs, s.root_set);
  fill_sizes(rs, s);

  int c = rs.cartan_rank;
  s.lv_center = span_intersect(d.theta_domain, common_zeros(rs, s.root_set));
  std::vector<QVec> gens;
  auto stack = [&](const QVec& top, const QVec& bottom) {
    QVec v(top);
    v.insert(v.end(), bottom.begin(), bottom.end());
    gens.push_back(v);
  };
  QVec zero(c);
  for (std::size_t k = 0; k < s.lv_center.cols(); ++k) {
    QVec x = s.lv_center.col(k);
    stack(x, v2.m.to_q() * d.theta(x));
  }
  std::vector<IVec> bar_roots;
  for (const auto& r : s.root_set)
    if (l1.count(v1inv.m * r)) bar_roots.push_back(r);
  QMat bar_center = span_intersect(act(v1, d.theta_domain), common_zeros(rs, bar_roots));
  for (std::size_t k = 0; k < bar_center.cols(); ++k) {
    QVec x = bar_center.col(k);
    stack(x, d.theta(v1inv.m.to_q() * x));
  }
  QMat left = span_sum(d.h_ort1, act(v1, d.h_ort1));
  QMat right = span_sum(d.h_ort2, act(v2, d.h_ort2));
  for (std::size_t k = 0; k < left.cols(); ++k) stack(left.col(k), zero);
  for (std::size_t k = 0; k < right.cols(); ++k) stack(zero, right.col(k));
  s.z_dim = gens.empty() ? 0 : int(rank(QMat::from_columns(gens, 2 * c)));
  int zg2 = c - root_span_rank(rs, s.partner_roots);
  s.abelian_dim = s.center_dim + zg2 - s.z_dim;
  s.cong_dim = s.center_dim - s.abelian_dim;
  s.moduli_dim = s.abelian_dim;
  return s;
}

int pair_cong_dim(const RootSystem& rs, const Decomposition& d, const StableSubalgebra& s, const WeylElement& v1,
                  const WeylElement& v2) {
  QMat th = d.theta_matrix();
  QMat sigma = v1.m.to_q() * d.theta_inverse_matrix() * v2.m.to_q() * th;
  QMat z = common_zeros(rs, s.root_set);
  if (z.cols() == 0) return 0;
  return int(rank((sigma - QMat::identity(rs.cartan_rank)) * z));
}

LeafRecord g_record(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const WeylElement& v1,
                    const WeylElement& v2) {
  LeafRecord rec;
  rec.v = {v1, v2};
  rec.stable = stable_subalgebra_pair(rs, w, d, v1, v2);
  const auto& s = rec.stable;
  rec.length = v1.length + v2.length;
  rec.orbit_dim_max = int(s.root_set.size());
  int coeff = rec.orbit_dim_max > 0 ? 1 : 0;
  long leaf = long(d.dim_l1a1) + 2 * long(d.h_ort1.cols()) - s.derived_dim + rec.length - s.abelian_dim;
  long coset = 2 * long(d.dim_g) - 2 * long(d.n_plus_roots.size()) - s.derived_dim + rec.length - s.abelian_dim;
  rec.leaf_dim = {leaf, coeff};
  rec.coset_dim = {coset, coeff};
  rec.cong_product_dim = s.cong_dim;
  if (full_h_predicate(d)) {
    int cong = pair_cong_dim(rs, d, s, v1, v2);
    if (s.abelian_dim != s.center_dim - cong)
      throw Error(ErrorCode::InvariantViolation, "abelian factor disagrees with the full-Cartan congruence rank");
    rec.simplified_leaf_dim =
        DimExpr{long(d.levi1_roots.size()) - long(s.root_set.size()) + rec.length, 1};
  }
  return rec;
}

std::vector<LeafRecord> classify_g(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                   bool require_simplified) {
  if (require_simplified && !full_h_predicate(d))
    throw Error(ErrorCode::SimplifiedPathUnavailable, "h_ort is nonzero, the full-Cartan formula does not apply");
  std::vector<LeafRecord> out;
  auto reps1 = minimal_coset_reps(w, {}, d.triple.gamma1);
  auto reps2 = minimal_coset_reps(w, {}, d.triple.gamma2);
  for (const auto& v1 : reps1)
    for (const auto& v2 : reps2) out.push_back(g_record(rs, w, d, v1, v2));
  return out;
}

QMat lattice_reduce(const QMat& gens) {
  std::size_t r = gens.rows();
  Z den = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), gens(i, j).get_den_mpz_t());
  std::vector<std::vector<Z>> cols;
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    std::vector<Z> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = Q(gens(i, j) * den).get_num();
    cols.push_back(v);
  }
  auto basis = lattice_basis(cols, r);
  QMat out(r, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) out(i, j) = Q(basis[j][i]) / den;
  return out;
}

FiniteAbelianGroup lattice_quotient(const QMat& b) {
  std::size_t n = b.rows();
  auto binv = inverse(b);
  if (!binv) throw Error(ErrorCode::ThetaMinusOneSingular, "lattice map is singular");
  // (Z^n intersect B Z^n)^* = Z^n + B^{-T} Z^n
  QMat dual = QMat::identity(n).hcat(binv->transpose());
  QMat sum = lattice_reduce(dual);
  auto sum_inv = inverse(sum);
  if (!sum_inv) throw Error(ErrorCode::NonCommensurableLattices, "dual lattice sum is degenerate");
  QMat inter = sum_inv->transpose();
  std::vector<std::vector<Z>> rows(n, std::vector<Z>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inter(i, j).get_den() != 1) throw Error(ErrorCode::InvariantViolation, "intersection lattice is not integral");
      rows[i][j] = inter(i, j).get_num();
    }
  FiniteAbelianGroup g;
  for (const auto& f : smith_invariants(rows))
    if (f != 1) g.invariant_factors.push_back(f);
  return g;
}

FiniteAbelianGroup sigma_group(const RootSystem& rs, const Decomposition& d, const Lattice& kernel,
                               const std::optional<Lattice>& kernel_prime) {
  std::size_t c = rs.cartan_rank;
  if (!full_h_predicate(d)) throw Error(ErrorCode::ThetaMinusOneSingular, "h_ort is nonzero, 1 - theta is not invertible on h");
  QMat one_minus = QMat::identity(c) - d.theta_matrix();
  if (!inverse(one_minus)) throw Error(ErrorCode::ThetaMinusOneSingular, "1 - theta is singular");
  QMat k = lattice_reduce(kernel.basis);
  QMat kp = kernel_prime ? lattice_reduce(kernel_prime->basis) : k;
  if (k.cols() != c || kp.cols() != c)
    throw Error(ErrorCode::NonCommensurableLattices, "kernel lattices must have full rank " + std::to_string(c));
  QMat b = *inverse(kp) * one_minus * k;
  return lattice_quotient(b);
}

}  // namespace leafatlas
