#include "leafatlas/typea.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leafatlas/errors.hpp"

namespace leafatlas::typea {

int matrix_size(const RootSystem& rs) { return rs.ss_rank + 1; }

void require_type_a(const RootSystem& rs) {
  if (!is_type_a(rs)) throw Error(ErrorCode::NotTypeA, "matrix realization needs a single A_n factor, got " + rs.label);
}

QMat unit(int size, int i, int j) {
  QMat m(size, size);
  m(i, j) = 1;
  return m;
}

QMat cartan_basis(int size, int i) {
  QMat m(size, size);
  m(i, i) = 1;
  m(i + 1, i + 1) = -1;
  return m;
}

QMat cartan_element(const QVec& x) {
  int size = int(x.size()) + 1;
  QMat m(size, size);
  for (int i = 0; i < int(x.size()); ++i) {
    m(i, i) += x[i];
    m(i + 1, i + 1) -= x[i];
  }
  return m;
}

// t-coordinates of a traceless diagonal matrix
static QVec cartan_coords(const QMat& m) {
  QVec c(m.rows() - 1);
  Q run = 0;
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    run += m(i, i);
    c[i] = run;
  }
  return c;
}

std::pair<int, int> root_positions(const IVec& root) {
  int first = -1, last = -1, sign = 0;
  for (int i = 0; i < int(root.size()); ++i) {
    if (!root[i]) continue;
    if (root[i] != 1 && root[i] != -1) throw Error(ErrorCode::NotTypeA, "coefficient outside {-1, 0, 1}");
    if (sign && root[i] != sign) throw Error(ErrorCode::NotTypeA, "mixed signs");
    sign = root[i];
    if (first < 0) first = i;
    else if (i != last + 1) throw Error(ErrorCode::NotTypeA, "support not contiguous");
    last = i;
  }
  if (first < 0) throw Error(ErrorCode::InvalidInput, "zero vector is not a root");
  return sign > 0 ? std::make_pair(first, last + 1) : std::make_pair(last + 1, first);
}

QMat root_vector(const IVec& root) {
  auto [p, q] = root_positions(root);
  return unit(int(root.size()) + 1, p, q);
}

static QMat bracket(const QMat& a, const QMat& b) { return a * b - b * a; }

static IVec positions_to_root(int size, int p, int q) {
  IVec r(size - 1, 0);
  int s = p < q ? 1 : -1;
  for (int k = std::min(p, q); k < std::max(p, q); ++k) r[k] = s;
  return r;
}

QMat phi_root_vector(const RootSystem& rs, const BDTriple& t, const IVec& alpha) {
  if (!tau_root(rs, t, alpha)) throw Error(ErrorCode::InvalidInput, "root outside the first Levi");
  int size = matrix_size(rs);
  auto [p, q] = root_positions(alpha);
  if (p > q) return phi_root_vector(rs, t, negate(alpha)).transpose();
  if (q == p + 1) return root_vector(*tau_root(rs, t, alpha));
  // E_pq = [E_{p,p+1}, E_{p+1,q}]
  QMat head = phi_root_vector(rs, t, positions_to_root(size, p, p + 1));
  QMat tail = phi_root_vector(rs, t, positions_to_root(size, p + 1, q));
  return bracket(head, tail);
}

QMat kron(const QMat& a, const QMat& b) {
  QMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

QMat swap_operator(int size) {
  QMat p(size * size, size * size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) p(j * size + i, i * size + j) = 1;
  return p;
}

TensorElement realize_r(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0, bool include_wedge) {
  require_type_a(rs);
  int n = rs.ss_rank, size = n + 1;
  QMat op(size * size, size * size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(r0.r0(i, j)) != 0) op = op + kron(cartan_basis(size, i), cartan_basis(size, j)) * r0.r0(i, j);
  for (const auto& a : rs.positive_roots) op = op + kron(root_vector(negate(a)), root_vector(a));
  if (include_wedge) {
    for (const auto& a : rs.positive_roots) {
      QMat x = root_vector(a);
      IVec cur = a;
      while (auto next = tau_root(rs, t, cur)) {
        // x tracks phi^k(x_alpha) = +-x_{tau^k alpha}
        auto [p, q] = root_positions(cur);
        Q sign = x(p, q);
        x = phi_root_vector(rs, t, cur) * sign;
        cur = *next;
        QMat xm = root_vector(negate(a));
        op = op + kron(xm, x) - kron(x, xm);
      }
    }
  }
  return {size, op};
}

TensorElement casimir(const RootSystem& rs) {
  require_type_a(rs);
  int n = rs.ss_rank, size = n + 1;
  QMat ginv = omega0(rs);
  QMat op(size * size, size * size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i != j) op = op + kron(unit(size, i, j), unit(size, j, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(ginv(i, j)) != 0) op = op + kron(cartan_basis(size, i), cartan_basis(size, j)) * ginv(i, j);
  return {size, op};
}

TensorElement flip(const TensorElement& r) {
  QMat p = swap_operator(r.size);
  return {r.size, p * r.op * p};
}

QMat check_cybe(const TensorElement& r) {
  int s = r.size;
  QMat id = QMat::identity(s);
  QMat r12 = kron(r.op, id);
  QMat r23 = kron(id, r.op);
  QMat p23 = kron(id, swap_operator(s));
  QMat r13 = p23 * r12 * p23;
  auto comm = [](const QMat& a, const QMat& b) { return a * b - b * a; };
  return comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
}

bool check_symmetric_part(const RootSystem& rs, const TensorElement& r) {
  return r.op + flip(r).op == casimir(rs).op;
}

std::vector<int> weyl_to_perm(const RootSystem& rs, const WeylElement& w) {
  require_type_a(rs);
  int n = rs.ss_rank;
  std::vector<int> sigma(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    auto [p, q] = root_positions(w.m * rs.simple_roots[i]);
    if ((sigma[i] >= 0 && sigma[i] != p)) throw Error(ErrorCode::InvariantViolation, "not a permutation action");
    sigma[i] = p;
    sigma[i + 1] = q;
  }
  if (n == 0) sigma[0] = 0;
  return sigma;
}

WeylElement perm_to_weyl(const WeylGroup& w, const std::vector<int>& sigma) {
  const auto& rs = w.root_system();
  require_type_a(rs);
  int n = rs.ss_rank;
  if (int(sigma.size()) != n + 1) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  IMat m(n, n);
  for (int i = 0; i < n; ++i) {
    IVec col = positions_to_root(n + 1, sigma[i], sigma[i + 1]);
    for (int k = 0; k < n; ++k) m(k, i) = col[k];
  }
  return w.make(m);
}

QMat perm_matrix(const std::vector<int>& sigma) {
  int size = int(sigma.size());
  QMat p(size, size);
  for (int k = 0; k < size; ++k) p(sigma[k], k) = 1;
  int inversions = 0;
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (sigma[a] > sigma[b]) ++inversions;
  if (inversions % 2) {
    int k = 0;
    while (sigma[k] == k) ++k;
    p(sigma[k], k) = -1;
  }
  return p;
}

QMat weyl_rep(const RootSystem& rs, const WeylElement& w) { return perm_matrix(weyl_to_perm(rs, w)); }

std::vector<int> block_of(int size, const std::vector<int>& simple) {
  std::vector<int> b(size, 0);
  for (int p = 0; p + 1 < size; ++p)
    b[p + 1] = std::count(simple.begin(), simple.end(), p) ? b[p] : b[p] + 1;
  return b;
}

bool in_parabolic(const QMat& p, const std::vector<int>& simple) {
  auto b = block_of(int(p.rows()), simple);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (b[i] > b[j] && sgn(p(i, j)) != 0) return false;
  return true;
}

bool in_levi(const QMat& p, const std::vector<int>& simple) {
  auto b = block_of(int(p.rows()), simple);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (b[i] != b[j] && sgn(p(i, j)) != 0) return false;
  return true;
}

QMat levi_part(const QMat& p, const std::vector<int>& simple) {
  auto b = block_of(int(p.rows()), simple);
  QMat l(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (b[i] == b[j]) l(i, j) = p(i, j);
  return l;
}

bool supported_on_roots(const QMat& m, const std::vector<IVec>& roots) {
  std::set<std::pair<int, int>> ok;
  for (const auto& r : roots) ok.insert(root_positions(r));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && sgn(m(i, j)) != 0 && !ok.count({int(i), int(j)})) return false;
  return true;
}

BruhatResult bruhat_decompose(const RootSystem& rs, const WeylGroup& w, const QMat& g, const std::vector<int>& left,
                              const std::vector<int>& right) {
  require_type_a(rs);
  int size = matrix_size(rs);
  if (int(g.rows()) != size || int(g.cols()) != size) throw Error(ErrorCode::DimensionMismatch, "matrix size");
  if (sgn(det(g)) == 0) throw Error(ErrorCode::InvalidInput, "Bruhat decomposition needs an invertible matrix");
  QMat a = g, rows = QMat::identity(size), cols = QMat::identity(size);
  std::vector<bool> used(size, false);
  std::vector<int> sigma(size);
  for (int c = 0; c < size; ++c) {
    int r = size - 1;
    while (r >= 0 && (used[r] || sgn(a(r, c)) == 0)) --r;
    if (r < 0) throw Error(ErrorCode::InvariantViolation, "no pivot in Bruhat elimination");
    for (int k = 0; k < r; ++k) {
      if (sgn(a(k, c)) == 0) continue;
      Q f = a(k, c) / a(r, c);
      for (int j = 0; j < size; ++j) {
        a(k, j) -= f * a(r, j);
        rows(k, j) -= f * rows(r, j);
      }
    }
    for (int m = c + 1; m < size; ++m) {
      if (sgn(a(r, m)) == 0) continue;
      Q f = a(r, m) / a(r, c);
      for (int i = 0; i < size; ++i) {
        a(i, m) -= f * a(i, c);
        cols(i, m) -= f * cols(i, c);
      }
    }
    used[r] = true;
    sigma[c] = r;
  }
  BruhatResult out;
  out.u1 = *inverse(rows);
  out.u2 = *inverse(cols);
  out.monomial = a;
  WeylElement w0 = perm_to_weyl(w, sigma);
  QMat w0dot = perm_matrix(sigma);
  QMat dprime = *inverse(w0dot) * a;
  MinDecomposition dec = decompose_min(w, w0, left, right);
  QMat adot = weyl_rep(rs, dec.w1), wdot = weyl_rep(rs, dec.w), cdot = weyl_rep(rs, dec.w2);
  QMat signs = *inverse(adot * wdot * cdot) * w0dot;
  out.w = dec.w;
  out.wdot = wdot;
  out.p1 = out.u1 * adot;
  out.p2 = cdot * signs * dprime * out.u2;
  if (out.p1 * out.wdot * out.p2 != g || !in_parabolic(out.p1, left) || !in_parabolic(out.p2, right))
    throw Error(ErrorCode::InvariantViolation, "Bruhat factors do not reassemble");
  return out;
}

QMat TwistAutomorphism::apply(const QMat& x) const {
  QMat y = x;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) y = (*it)(y);
  return y;
}

TwistAutomorphism conjugation_twist(const QMat& m) {
  QMat inv = *inverse(m);
  return {"conjugation", {[m, inv](const QMat& x) { return m * x * inv; }}};
}

static QMat diagonal_part(const QMat& x) {
  QMat d(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) d(i, i) = x(i, i);
  return d;
}

QMat theta_prime(const RootSystem& rs, const Decomposition& d, const QMat& x) {
  int size = matrix_size(rs);
  QMat out(size, size);
  for (int p = 0; p < size; ++p)
    for (int q = 0; q < size; ++q) {
      if (p == q || sgn(x(p, q)) == 0) continue;
      IVec r = positions_to_root(size, p, q);
      if (!d.theta_roots.count(r)) throw Error(ErrorCode::SubalgebraNotPreserved, "entry outside the first Levi");
      out = out + phi_root_vector(rs, d.triple, r) * x(p, q);
    }
  QVec c = cartan_coords(diagonal_part(x));
  if (!span_contains(d.theta_domain, c)) throw Error(ErrorCode::SubalgebraNotPreserved, "Cartan part outside the theta domain");
  return out + cartan_element(d.theta(c));
}

QMat theta_prime_inverse(const RootSystem& rs, const Decomposition& d, const QMat& x) {
  int size = matrix_size(rs);
  QMat out(size, size);
  for (int p = 0; p < size; ++p)
    for (int q = 0; q < size; ++q) {
      if (p == q || sgn(x(p, q)) == 0) continue;
      auto pre = tau_inverse_root(rs, d.triple, positions_to_root(size, p, q));
      if (!pre) throw Error(ErrorCode::SubalgebraNotPreserved, "entry outside the second Levi");
      QMat img = phi_root_vector(rs, d.triple, *pre);
      out = out + root_vector(*pre) * (x(p, q) / img(p, q));
    }
  QVec c = cartan_coords(diagonal_part(x));
  if (!span_contains(d.theta_image, c)) throw Error(ErrorCode::SubalgebraNotPreserved, "Cartan part outside the theta image");
  QMat k = coords_in(d.theta_image, QMat::column(c));
  return out + cartan_element(d.theta_domain * k.col(0));
}

TwistAutomorphism chain_twist(const RootSystem& rs, const Decomposition& d, const WeylElement& v1,
                              const WeylElement& v2) {
  TwistAutomorphism a1 = conjugation_twist(weyl_rep(rs, v1));
  TwistAutomorphism a2 = conjugation_twist(weyl_rep(rs, v2));
  const RootSystem* rsp = &rs;
  const Decomposition* dp = &d;
  return {"Ad(v1) Theta'^-1 Ad(v2) Theta'",
          {a1.factors[0], [rsp, dp](const QMat& x) { return theta_prime_inverse(*rsp, *dp, x); }, a2.factors[0],
           [rsp, dp](const QMat& x) { return theta_prime(*rsp, *dp, x); }}};
}

std::vector<QMat> subalgebra_basis(const RootSystem& rs, const std::vector<IVec>& roots, Part part) {
  int size = matrix_size(rs);
  std::vector<QMat> basis;
  for (const auto& r : roots) basis.push_back(root_vector(r));
  if (part == Part::Full) {
    for (int i = 0; i < rs.ss_rank; ++i) basis.push_back(cartan_basis(size, i));
  } else {
    std::vector<QVec> coroots;
    for (const auto& r : roots)
      if (rs.is_positive(r)) coroots.push_back(to_q(r));
    if (!coroots.empty()) {
      QMat span = span_basis(QMat::from_columns(coroots, rs.cartan_rank));
      for (std::size_t k = 0; k < span.cols(); ++k) basis.push_back(cartan_element(span.col(k)));
    }
  }
  return basis;
}

static QVec flatten(const QMat& m) {
  QVec v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

int tc_orbit_dim(const RootSystem& rs, const QMat& f, const TwistAutomorphism& twist, const std::vector<IVec>& roots,
                 Part part) {
  require_type_a(rs);
  auto basis = subalgebra_basis(rs, roots, part);
  if (basis.empty()) return 0;
  auto finv = inverse(f);
  if (!finv) throw Error(ErrorCode::InvalidInput, "orbit point must be invertible");
  int n2 = matrix_size(rs) * matrix_size(rs);
  std::vector<QVec> flat, images;
  for (const auto& b : basis) flat.push_back(flatten(b));
  QMat span = QMat::from_columns(flat, n2);
  for (const auto& b : basis) {
    QMat tb = twist.apply(b);
    if (!span_contains(span, flatten(tb))) throw Error(ErrorCode::SubalgebraNotPreserved, twist.description + " leaves the subalgebra");
    images.push_back(flatten(f * tb * *finv - b));
  }
  return int(rank(QMat::from_columns(images, n2)));
}

int centralizer_dim(const RootSystem& rs, const QMat& f, const std::vector<IVec>& roots, Part part) {
  auto basis = subalgebra_basis(rs, roots, part);
  if (basis.empty()) return 0;
  int n2 = matrix_size(rs) * matrix_size(rs);
  std::vector<QVec> images;
  for (const auto& b : basis) images.push_back(flatten(f * b - b * f));
  return int(nullspace(QMat::from_columns(images, n2)).cols());
}

NormalizeResult normalize_coset(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const QMat& l,
                                const WeylElement& wel) {
  require_type_a(rs);
  const auto& g1 = d.triple.gamma1;
  int size = matrix_size(rs);
  if (int(l.rows()) != size || int(l.cols()) != size) throw Error(ErrorCode::DimensionMismatch, "matrix size");
  if (!in_levi(l, g1) || det(l) != 1) throw Error(ErrorCode::NotInLevi, "l must be block diagonal for gamma1 with det 1");
  for (int j : g1)
    if (!w.sends_positive(wel.m, rs.simple_roots[j]))
      throw Error(ErrorCode::NotMinimalRep, "w is not minimal in w W_1");
  // w = w1 w' with w1 in W_1; l w = (l w1 (w' D w'^{-1})) w'
  MinDecomposition dec = decompose_min(w, wel, g1, g1);
  QMat wdot_in = weyl_rep(rs, wel), a = weyl_rep(rs, dec.w1), core = weyl_rep(rs, dec.w);
  QMat signs = *inverse(a * core) * wdot_in;
  QMat g = l * a * core * signs * *inverse(core);
  WeylElement prod = dec.w;
  QMat pdot = core;

  std::set<IVec> roots_g(d.levi1_roots.begin(), d.levi1_roots.end());
  int steps = 1;
  auto image = [&](const std::set<IVec>& s) {
    std::set<IVec> out;
    for (const auto& r : s) out.insert(prod.m * r);
    return out;
  };
  auto simple_in = [&](const std::set<IVec>& s) {
    std::vector<int> out;
    for (int i = 0; i < rs.ss_rank; ++i)
      if (s.count(rs.simple_roots[i])) out.push_back(i);
    return out;
  };
  while (image(roots_g) != roots_g) {
    if (steps > int(rs.roots.size()) + 1) throw Error(ErrorCode::InvariantViolation, "normalization does not terminate");
    std::set<IVec> next;
    for (const auto& r : roots_g)
      if (roots_g.count(prod.m * r)) next.insert(r);
    std::set<IVec> bar;
    for (const auto& r : next) bar.insert(prod.m * r);
    std::vector<int> left = simple_in(next), right = simple_in(bar);
    if (levi_roots(rs, left).size() != next.size() || levi_roots(rs, right).size() != bar.size())
      throw Error(ErrorCode::InvariantViolation, "intermediate subalgebra is not standard");
    BruhatResult br = bruhat_decompose(rs, w, g, left, right);
    QMat gp = levi_part(br.p1, left), gpp = levi_part(br.p2, right);
    QMat y = *inverse(pdot) * gpp * pdot;
    g = y * gp;
    prod = w.mul(br.w, prod);
    pdot = br.wdot * pdot;
    roots_g = next;
    ++steps;
  }
  for (int j : g1)
    if (!w.sends_positive(prod.m, rs.simple_roots[j]))
      throw Error(ErrorCode::InvariantViolation, "normalized v is not minimal in v W_1");
  NormalizeResult res;
  res.v = prod;
  res.gK = g * pdot * *inverse(weyl_rep(rs, prod));
  res.steps = steps;
  std::vector<IVec> rg(roots_g.begin(), roots_g.end());
  if (!supported_on_roots(res.gK, rg) || det(res.gK) != 1)
    throw Error(ErrorCode::InvariantViolation, "normalized element left the stable subgroup");
  return res;
}

std::vector<int> cg_sigma1(int n, int j) {
  std::vector<int> s(n + 1);
  for (int p = 0; p <= n; ++p) s[p] = p < j ? p : (p < n ? p + 1 : j);
  return s;
}

std::vector<int> cg_sigma2(int n, int k) {
  int m = n - k;
  std::vector<int> s(n + 1);
  for (int p = 0; p <= n; ++p) s[p] = p == 0 ? m : (p <= m ? p - 1 : p);
  return s;
}

int gl_conjugation_orbit_dim(const QMat& b) {
  int j = int(b.rows());
  if (j == 0) return 0;
  std::vector<QVec> images;
  for (int p = 0; p < j; ++p)
    for (int q = 0; q < j; ++q) {
      QMat e = unit(j, p, q);
      images.push_back(flatten(b * e - e * b));
    }
  return int(rank(QMat::from_columns(images, j * j)));
}

std::pair<int, int> cg_orbit_correspondence(int n, int j, const QMat& b) {
  if (j < 0 || j > n || int(b.rows()) != j || int(b.cols()) != j)
    throw Error(ErrorCode::InvalidInput, "block size must satisfy 0 <= j <= n");
  Q dt = j ? det(b) : Q(1);
  if (sgn(dt) == 0) throw Error(ErrorCode::InvalidInput, "block must be invertible");
  RootSystem rs = build_root_system("A" + std::to_string(n));
  WeylGroup w(rs);
  QMat f = QMat::identity(n + 1);
  for (int p = 0; p < j; ++p)
    for (int q = 0; q < j; ++q) f(p, q) = b(p, q);
  f(n, n) = 1 / dt;
  std::vector<int> block;
  for (int i = 0; i + 1 < j; ++i) block.push_back(i);
  auto roots = levi_roots(rs, block);
  QMat vdot = perm_matrix(cg_sigma1(n, j));
  int tc = tc_orbit_dim(rs, f, conjugation_twist(vdot), roots, Part::Full);
  int gl = gl_conjugation_orbit_dim(b);
  if (tc - gl != n - j) throw Error(ErrorCode::InvariantViolation, "orbit dimension gap differs from n - j");
  return {tc, gl};
}

}  // namespace leafatlas::typea
