#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace leafatlas {

using Q = mpq_class;
using Z = mpz_class;

using QVec = std::vector<Q>;
using IVec = std::vector<int>;

// Dense exact rational matrix, row-major.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat from_columns(const std::vector<QVec>& cols, std::size_t rows);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat column(const QVec& v);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  QVec col(std::size_t j) const;
  QVec row(std::size_t i) const;
  std::vector<QVec> columns() const;

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QVec operator*(const QVec& v) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const Q& s) const;
  QMat operator-() const;
  bool operator==(const QMat& o) const;
  bool operator!=(const QMat& o) const { return !(*this == o); }

  bool is_zero() const;
  QMat hcat(const QMat& o) const;
  QMat vcat(const QMat& o) const;
  QMat select_columns(const std::vector<std::size_t>& idx) const;

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

// Rank via fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const QMat& m);
Q det(const QMat& m);

struct Rref {
  QMat m;
  std::vector<std::size_t> pivots;
};
Rref rref(const QMat& m);

// Columns form a basis of {x : m x = 0}; free variables in increasing order.
QMat nullspace(const QMat& m);
// Particular solution of m x = b with free variables set to zero.
std::optional<QVec> solve(const QMat& m, const QVec& b);
std::optional<QMat> inverse(const QMat& m);

// Subspaces are carried as matrices whose columns are a basis.
QMat span_basis(const QMat& gens);
QMat span_sum(const QMat& a, const QMat& b);
QMat span_intersect(const QMat& a, const QMat& b);
bool span_contains(const QMat& a, const QVec& v);
bool span_contains(const QMat& a, const QMat& b);
bool span_equal(const QMat& a, const QMat& b);
// {y : (x, y) = 0 for all x in a} under the form with Gram matrix g.
QMat orth_complement(const QMat& a, const QMat& g);
// Deterministic complement of sub inside ambient: greedily keeps ambient columns.
QMat complement_in(const QMat& sub, const QMat& ambient);
// Coordinates of the columns of b in the basis a (a must contain b).
QMat coords_in(const QMat& a, const QMat& b);
QMat empty_span(std::size_t dim);

// Integer matrices for Weyl elements and lattices.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0) {}
  static IMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  int operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  IMat operator*(const IMat& o) const;
  IVec operator*(const IVec& v) const;
  IMat transpose() const;
  bool operator==(const IMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator<(const IMat& o) const { return a_ < o.a_; }
  const std::vector<int>& data() const { return a_; }
  QMat to_q() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<int> a_;
};

IMat to_int(const QMat& m);

// Invariant factors (nonzero diagonal of the Smith form) of an integer matrix.
std::vector<Z> smith_invariants(std::vector<std::vector<Z>> m);
// Basis (columns) of the lattice generated by integer columns.
std::vector<std::vector<Z>> lattice_basis(const std::vector<std::vector<Z>>& gens, std::size_t dim);

Q parse_rational(const std::string& s);
std::string q_str(const Q& q);
QMat parse_matrix(const std::string& text);
std::string format_matrix(const QMat& m);

}  // namespace leafatlas
