#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafatlas/linalg.hpp"

namespace leafatlas {

struct RootSystemOptions {
  // Gram block for the central torus; identity when absent.
  std::optional<QMat> torus_gram;
  // Generators (columns, t-coordinates) of the exponential kernel; required with a torus.
  std::optional<QMat> kernel;
};

// Roots live in simple-root coordinates padded with zeros on the torus,
// so every vector has length cartan_rank. The same coordinates describe h:
// coordinate vector x stands for sum x_i t_i, where t_i pairs with y as alpha_i(y).
struct RootSystem {
  std::string label;
  std::vector<std::pair<char, int>> components;
  int torus_rank = 0;
  int ss_rank = 0;
  int cartan_rank = 0;
  QMat gram;
  std::vector<IVec> simple_roots;
  std::vector<IVec> positive_roots;
  // positive roots followed by their negatives, same order
  std::vector<IVec> roots;
  std::map<IVec, int> index;
  RootSystemOptions options;

  int num_positive() const { return int(positive_roots.size()); }
  int root_index(const IVec& v) const;
  bool is_root(const IVec& v) const { return root_index(v) >= 0; }
  bool is_positive(const IVec& v) const;
  int dim() const { return cartan_rank + int(roots.size()); }
  int height(const IVec& v) const;
  // Simple roots with a nonzero coefficient.
  std::vector<int> support(const IVec& v) const;
};

struct Lattice {
  QMat basis;
};

RootSystem build_root_system(const std::string& label, const RootSystemOptions& opts = {});
Q form_pairing(const RootSystem& rs, const QVec& x, const QVec& y);
Q form_pairing(const RootSystem& rs, const IVec& x, const IVec& y);
Lattice exp_kernel_lattice(const RootSystem& rs);

QVec to_q(const IVec& v);
IVec negate(const IVec& v);
// alpha(x) for x in h given by t-coordinates.
Q evaluate_root(const RootSystem& rs, const IVec& alpha, const QVec& x);
// Rows alpha^T G for the given roots; the kernel is the common zero set.
QMat root_functionals(const RootSystem& rs, const std::vector<IVec>& alphas);
// Columns t_alpha for the simple roots listed.
QMat simple_coroot_span(const RootSystem& rs, const std::vector<int>& simple);
// Roots whose support lies in the given simple-root set.
std::vector<IVec> levi_roots(const RootSystem& rs, const std::vector<int>& simple, bool positive_only = false);
IMat simple_reflection(const RootSystem& rs, int i);
bool is_type_a(const RootSystem& rs);

}  // namespace leafatlas
