#include "leafatlas/decomp.hpp"

#include <algorithm>
#include <set>

#include "leafatlas/errors.hpp"

namespace leafatlas {

namespace {

QMat zero_set(const RootSystem& rs, const std::vector<int>& simple) {
  if (simple.empty()) return QMat::identity(rs.cartan_rank);
  std::vector<IVec> a;
  for (int i : simple) a.push_back(rs.simple_roots[i]);
  return nullspace(root_functionals(rs, a));
}

bool root_in(const std::vector<IVec>& v, const IVec& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

QVec Decomposition::theta(const QVec& x) const {
  QMat c = coords_in(theta_domain, QMat::column(x));
  return theta_image * c.col(0);
}

QMat Decomposition::theta_matrix() const {
  auto inv = inverse(theta_domain);
  if (theta_domain.rows() != theta_domain.cols() || !inv)
    throw Error(ErrorCode::ThetaMinusOneSingular, "theta is not defined on all of h");
  return theta_image * *inv;
}

QMat Decomposition::theta_inverse_matrix() const {
  auto inv = inverse(theta_matrix());
  if (!inv) throw Error(ErrorCode::InvariantViolation, "theta is not invertible");
  return *inv;
}

Decomposition compute_decomposition(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0) {
  Decomposition d;
  int c = rs.cartan_rank;
  d.triple = t;
  d.r0 = r0;
  d.levi1_roots = levi_roots(rs, t.gamma1);
  d.levi2_roots = levi_roots(rs, t.gamma2);
  for (const auto& p : rs.positive_roots)
    if (!root_in(d.levi1_roots, p)) d.n_plus_roots.push_back(p);
  for (const auto& p : rs.positive_roots)
    if (!root_in(d.levi2_roots, p)) d.n_minus_roots.push_back(negate(p));
  d.lh1 = simple_coroot_span(rs, t.gamma1);
  d.lh2 = simple_coroot_span(rs, t.gamma2);
  d.z1 = zero_set(rs, t.gamma1);
  d.z2 = zero_set(rs, t.gamma2);

  d.f_cartan = r0.r0 * rs.gram;
  QMat one_minus = QMat::identity(c) - d.f_cartan;
  d.gplus_cartan = span_basis(one_minus);
  d.gminus_cartan = span_basis(d.f_cartan);
  d.h1 = span_intersect(d.gplus_cartan, d.z1);
  d.h2 = span_intersect(d.gminus_cartan, d.z2);
  d.h_ort1 = orth_complement(span_sum(d.h1, d.lh1), rs.gram);
  d.h_ort2 = orth_complement(span_sum(d.h2, d.lh2), rs.gram);
  d.a1 = complement_in(d.h_ort1, d.h1);

  d.theta_domain = d.lh1.hcat(d.a1);
  if (rank(d.theta_domain) != d.theta_domain.cols())
    throw Error(ErrorCode::DegenerateComplement, "a1 meets the Cartan part of l'_1");
  std::vector<QVec> images;
  for (std::size_t k = 0; k < d.theta_domain.cols(); ++k) {
    auto y = solve(one_minus, d.theta_domain.col(k));
    if (!y) throw Error(ErrorCode::DegenerateComplement, "theta domain not inside the Cartan part of g+");
    QVec fy = d.f_cartan * *y;
    for (auto& v : fy) v = -v;
    images.push_back(fy);
  }
  d.theta_image = QMat::from_columns(images, c);
  std::vector<QVec> a2cols(images.begin() + t.gamma1.size(), images.end());
  d.a2 = QMat::from_columns(a2cols, c);

  for (std::size_t k = 0; k < t.gamma1.size(); ++k) {
    int a = t.gamma1[k];
    QVec diff = images[k];
    diff[t.tau.at(a)] -= 1;
    bool ok = d.h_ort2.cols() ? span_contains(d.h_ort2, diff)
                              : std::all_of(diff.begin(), diff.end(), [](const Q& x) { return sgn(x) == 0; });
    if (!ok) throw Error(ErrorCode::DegenerateComplement, "theta does not extend tau on alpha" + std::to_string(a + 1));
  }
  if (rank(span_sum(d.a2, d.lh2)) != d.a2.cols() + d.lh2.cols() || !span_contains(d.h2, d.a2))
    throw Error(ErrorCode::DegenerateComplement, "theta(a1) is not a complement inside h2");
  for (const auto& r : d.levi1_roots) d.theta_roots[r] = *tau_root(rs, t, r);

  d.dim_g = rs.dim();
  d.dim_l1a1 = int(t.gamma1.size() + d.levi1_roots.size() + d.a1.cols());
  d.dim_gplus = d.dim_l1a1 + int(d.h_ort1.cols() + d.n_plus_roots.size());
  d.dim_mplus = int(d.h_ort1.cols() + d.n_plus_roots.size());
  d.dim_gminus = int(t.gamma2.size() + d.levi2_roots.size() + d.a2.cols() + d.h_ort2.cols() + d.n_minus_roots.size());
  d.dim_mminus = int(d.h_ort2.cols() + d.n_minus_roots.size());
  return d;
}

bool full_h_predicate(const Decomposition& d) { return d.h_ort1.cols() == 0 && d.h_ort2.cols() == 0; }

std::vector<NamedCheck> decomposition_checks(const RootSystem& rs, const Decomposition& d) {
  std::vector<NamedCheck> out;
  int c = rs.cartan_rank;
  auto perp = [&](const QMat& a, const QMat& b) {
    if (a.cols() == 0 || b.cols() == 0) return true;
    return (a.transpose() * rs.gram * b).is_zero();
  };
  out.push_back({"cartan_gplus_dim", d.gplus_cartan.cols() == d.triple.gamma1.size() + d.h1.cols()});
  out.push_back({"cartan_gminus_dim", d.gminus_cartan.cols() == d.triple.gamma2.size() + d.h2.cols()});
  out.push_back({"gplus_mplus_dim", d.dim_gplus + d.dim_mplus == d.dim_g});
  out.push_back({"gminus_mminus_dim", d.dim_gminus + d.dim_mminus == d.dim_g});
  out.push_back({"double_dim", 2 * d.dim_gplus == d.dim_g + d.dim_l1a1});
  out.push_back({"h_ort1_in_h1", span_contains(d.h1, d.h_ort1)});
  out.push_back({"h_ort2_in_h2", span_contains(d.h2, d.h_ort2)});
  out.push_back({"h_ort1_is_ker_f", span_equal(d.h_ort1, nullspace(d.f_cartan))});
  out.push_back({"h_ort2_is_ker_one_minus_f", span_equal(d.h_ort2, nullspace(QMat::identity(c) - d.f_cartan))});
  bool roots_perp = true;
  std::set<IVec> gp(d.levi1_roots.begin(), d.levi1_roots.end()), gm(d.levi2_roots.begin(), d.levi2_roots.end());
  gp.insert(d.n_plus_roots.begin(), d.n_plus_roots.end());
  gm.insert(d.n_minus_roots.begin(), d.n_minus_roots.end());
  for (const auto& a : d.n_plus_roots)
    if (gp.count(negate(a))) roots_perp = false;
  for (const auto& a : d.n_minus_roots)
    if (gm.count(negate(a))) roots_perp = false;
  out.push_back({"m_perp_g", roots_perp && perp(d.h_ort1, d.gplus_cartan) && perp(d.h_ort2, d.gminus_cartan)});
  bool iso = (d.theta_image.transpose() * rs.gram * d.theta_image) == (d.theta_domain.transpose() * rs.gram * d.theta_domain);
  out.push_back({"theta_isometry", iso});
  bool ext = true;
  for (const auto& [a, b] : d.theta_roots) {
    auto img = tau_root(rs, d.triple, a);
    if (!img || *img != b || !rs.is_root(b)) ext = false;
  }
  out.push_back({"theta_extends_tau", ext});
  out.push_back({"a_dims_match", d.a1.cols() == d.a2.cols()});
  return out;
}

}  // namespace leafatlas
