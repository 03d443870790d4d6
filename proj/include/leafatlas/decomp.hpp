#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leafatlas/bdtriple.hpp"

namespace leafatlas {

// Subspaces of h are column bases in t-coordinates.
struct Decomposition {
  BDTriple triple;
  CartanTerm r0;
  std::vector<IVec> levi1_roots, levi2_roots;
  std::vector<IVec> n_plus_roots, n_minus_roots;
  QMat lh1, lh2;  // Cartan parts of the derived Levi factors
  QMat z1, z2;
  QMat h1, h2, h_ort1, h_ort2, a1, a2;
  QMat f_cartan;
  QMat gplus_cartan, gminus_cartan;
  // theta sends column k of theta_domain to column k of theta_image (modulo h_ort2).
  QMat theta_domain, theta_image;
  std::map<IVec, IVec> theta_roots;

  int dim_g = 0, dim_gplus = 0, dim_gminus = 0, dim_mplus = 0, dim_mminus = 0;
  int dim_l1a1 = 0;  // dim(l'_1 + a_1)

  QVec theta(const QVec& x) const;
  // theta on all of h; requires the domain to be h.
  QMat theta_matrix() const;
  QMat theta_inverse_matrix() const;
};

Decomposition compute_decomposition(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0);
bool full_h_predicate(const Decomposition& d);

struct NamedCheck {
  std::string name;
  bool ok;
};
std::vector<NamedCheck> decomposition_checks(const RootSystem& rs, const Decomposition& d);

}  // namespace leafatlas
