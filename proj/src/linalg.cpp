#include "leafatlas/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "leafatlas/errors.hpp"

namespace leafatlas {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  QMat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::column(const QVec& v) { return from_columns({v}, v.size()); }

QVec QMat::col(std::size_t j) const {
  QVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVec QMat::row(std::size_t i) const {
  return QVec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

std::vector<QVec> QMat::columns() const {
  std::vector<QVec> out;
  for (std::size_t j = 0; j < c_; ++j) out.push_back(col(j));
  return out;
}

QMat QMat::transpose() const {
  QMat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (c_ != o.r_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  QMat p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) {
        const Q& y = o(k, j);
        if (sgn(y) != 0) p(i, j) += x * y;
      }
    }
  return p;
}

QVec QMat::operator*(const QVec& v) const {
  if (c_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  QVec out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k)
      if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

QMat QMat::operator+(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  QMat s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

QMat QMat::operator-(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  QMat s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

QMat QMat::operator*(const Q& s) const {
  QMat m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

QMat QMat::operator-() const { return (*this) * Q(-1); }

bool QMat::operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool QMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Q& x) { return sgn(x) == 0; });
}

QMat QMat::hcat(const QMat& o) const {
  if (r_ != o.r_) throw Error(ErrorCode::DimensionMismatch, "hcat");
  QMat m(r_, c_ + o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

QMat QMat::vcat(const QMat& o) const {
  if (c_ != o.c_) throw Error(ErrorCode::DimensionMismatch, "vcat");
  QMat m(r_ + o.r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
  return m;
}

QMat QMat::select_columns(const std::vector<std::size_t>& idx) const {
  QMat m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

std::string QMat::str() const { return format_matrix(*this); }

// Each row scaled by the lcm of its denominators.
static std::vector<std::vector<Z>> integer_rows(const QMat& m) {
  std::vector<std::vector<Z>> out(m.rows(), std::vector<Z>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Z l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Q x = m(i, j) * l;
      out[i][j] = x.get_num();
    }
  }
  return out;
}

std::size_t rank(const QMat& m) {
  auto a = integer_rows(m);
  std::size_t rows = m.rows(), cols = m.cols(), r = 0;
  Z prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Q det(const QMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  QMat a = m;
  std::size_t n = m.rows();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Q f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Rref rref(const QMat& m) {
  Rref out{m, {}};
  QMat& a = out.m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Q inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Q f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

QMat nullspace(const QMat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.m(k, f);
    basis.push_back(v);
  }
  return QMat::from_columns(basis, m.cols());
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve rhs");
  Rref rr = rref(m.hcat(QMat::column(b)));
  QVec x(m.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == m.cols()) return std::nullopt;
    x[rr.pivots[k]] = rr.m(k, m.cols());
  }
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Rref rr = rref(m.hcat(QMat::identity(n)));
  if (n == 0) return QMat();
  if (rr.pivots.size() < n || rr.pivots[n - 1] >= n) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.m(i, n + j);
  return inv;
}

QMat span_basis(const QMat& gens) {
  Rref rr = rref(gens);
  return gens.select_columns(rr.pivots);
}

QMat span_sum(const QMat& a, const QMat& b) { return span_basis(a.hcat(b)); }

QMat span_intersect(const QMat& a, const QMat& b) {
  QMat ab = span_basis(a), bb = span_basis(b);
  if (ab.cols() == 0 || bb.cols() == 0) return empty_span(a.rows());
  QMat k = nullspace(ab.hcat(-bb));
  QMat top(ab.cols(), k.cols());
  for (std::size_t i = 0; i < ab.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
  return span_basis(ab * top);
}

bool span_contains(const QMat& a, const QVec& v) {
  return rank(a.hcat(QMat::column(v))) == rank(a);
}

bool span_contains(const QMat& a, const QMat& b) { return rank(a.hcat(b)) == rank(a); }

bool span_equal(const QMat& a, const QMat& b) {
  return span_contains(a, b) && span_contains(b, a);
}

QMat orth_complement(const QMat& a, const QMat& g) {
  if (a.cols() == 0) return QMat::identity(g.rows());
  return nullspace(a.transpose() * g);
}

QMat complement_in(const QMat& sub, const QMat& ambient) {
  QMat cur = span_basis(sub);
  std::vector<QVec> picked;
  for (std::size_t j = 0; j < ambient.cols(); ++j) {
    QVec v = ambient.col(j);
    if (!span_contains(cur, v)) {
      cur = cur.hcat(QMat::column(v));
      picked.push_back(v);
    }
  }
  return QMat::from_columns(picked, ambient.rows());
}

QMat coords_in(const QMat& a, const QMat& b) {
  QMat out(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto x = solve(a, b.col(j));
    if (!x) throw Error(ErrorCode::DimensionMismatch, "vector not in span");
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, j) = (*x)[i];
  }
  return out;
}

QMat empty_span(std::size_t dim) { return QMat(dim, 0); }

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::operator*(const IMat& o) const {
  if (c_ != o.r_) throw Error(ErrorCode::DimensionMismatch, "integer matrix product");
  IMat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      int x = (*this)(i, k);
      if (!x) continue;
      for (int j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
    }
  return p;
}

IVec IMat::operator*(const IVec& v) const {
  if (int(v.size()) != c_) throw Error(ErrorCode::DimensionMismatch, "integer matrix-vector product");
  IVec out(r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

IMat IMat::transpose() const {
  IMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMat IMat::to_q() const {
  QMat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::string IMat::str() const { return format_matrix(to_q()); }

IMat to_int(const QMat& m) {
  IMat out(int(m.rows()), int(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Q& x = m(i, j);
      if (x.get_den() != 1 || !x.get_num().fits_sint_p())
        throw Error(ErrorCode::DimensionMismatch, "matrix entry is not a small integer");
      out(int(i), int(j)) = int(x.get_num().get_si());
    }
  return out;
}

std::vector<Z> smith_invariants(std::vector<std::vector<Z>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Z> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<std::vector<Z>> lattice_basis(const std::vector<std::vector<Z>>& gens, std::size_t dim) {
  std::vector<std::vector<Z>> rows = gens;
  for (auto& r : rows)
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "lattice generator length");
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string q_str(const Q& q) { return q.get_str(); }

QMat parse_matrix(const std::string& text) {
  std::vector<QVec> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    QVec row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(row);
  }
  if (!rows.empty())
    for (auto& r : rows)
      if (r.size() != rows[0].size()) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
  return QMat::from_rows(rows);
}

std::string format_matrix(const QMat& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace leafatlas
