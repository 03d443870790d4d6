#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "leafatlas/decomp.hpp"
#include "leafatlas/weyl.hpp"

namespace leafatlas {

// Matrices are (n+1)x(n+1) on V = Q^{n+1}; position p carries epsilon_p.
namespace typea {

int matrix_size(const RootSystem& rs);
void require_type_a(const RootSystem& rs);

QMat unit(int size, int i, int j);
// H_i = E_ii - E_{i+1,i+1}
QMat cartan_basis(int size, int i);
QMat cartan_element(const QVec& x);
// Positions (p, q) with root = epsilon_p - epsilon_q.
std::pair<int, int> root_positions(const IVec& root);
QMat root_vector(const IVec& root);
// Image of x_alpha under the Lie map extending tau with +1 on simple root vectors.
QMat phi_root_vector(const RootSystem& rs, const BDTriple& t, const IVec& alpha);

QMat kron(const QMat& a, const QMat& b);
// P(u (x) v) = v (x) u on V (x) V.
QMat swap_operator(int size);

// Operator of r on V (x) V.
struct TensorElement {
  int size = 0;
  QMat op;
};

TensorElement realize_r(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0, bool include_wedge = true);
TensorElement casimir(const RootSystem& rs);
TensorElement flip(const TensorElement& r);
QMat check_cybe(const TensorElement& r);
bool check_symmetric_part(const RootSystem& rs, const TensorElement& r);

// Permutation sigma of {0..n} with w(alpha_i) = epsilon_{sigma(i)} - epsilon_{sigma(i+1)}.
std::vector<int> weyl_to_perm(const RootSystem& rs, const WeylElement& w);
WeylElement perm_to_weyl(const WeylGroup& w, const std::vector<int>& sigma);
// Permutation matrix of sigma, first moved column negated when needed for det 1.
QMat perm_matrix(const std::vector<int>& sigma);
QMat weyl_rep(const RootSystem& rs, const WeylElement& w);

// Block boundaries: positions p, p+1 share a block iff alpha_p is in the set.
std::vector<int> block_of(int size, const std::vector<int>& simple);
bool in_parabolic(const QMat& p, const std::vector<int>& simple);
bool in_levi(const QMat& p, const std::vector<int>& simple);
QMat levi_part(const QMat& p, const std::vector<int>& simple);
// True when every nonzero entry sits on the diagonal or on a position of the given roots.
bool supported_on_roots(const QMat& m, const std::vector<IVec>& roots);

struct BruhatResult {
  QMat p1;
  WeylElement w;
  QMat wdot;
  QMat p2;
  // g = u1 * monomial * u2 with u1, u2 upper unitriangular
  QMat u1, monomial, u2;
};
BruhatResult bruhat_decompose(const RootSystem& rs, const WeylGroup& w, const QMat& g,
                              const std::vector<int>& left, const std::vector<int>& right);

struct TwistAutomorphism {
  std::string description;
  std::vector<std::function<QMat(const QMat&)>> factors;  // applied last-to-first
  QMat apply(const QMat& x) const;
};
TwistAutomorphism conjugation_twist(const QMat& m);
// Lie algebra map on l'_1 + a_1 extending theta on h and phi on root vectors.
QMat theta_prime(const RootSystem& rs, const Decomposition& d, const QMat& x);
QMat theta_prime_inverse(const RootSystem& rs, const Decomposition& d, const QMat& x);
// Ad_{v1} Theta'^{-1} Ad_{v2} Theta'
TwistAutomorphism chain_twist(const RootSystem& rs, const Decomposition& d, const WeylElement& v1,
                              const WeylElement& v2);

enum class Part { Derived, Full };
std::vector<QMat> subalgebra_basis(const RootSystem& rs, const std::vector<IVec>& roots, Part part);
int tc_orbit_dim(const RootSystem& rs, const QMat& f, const TwistAutomorphism& twist, const std::vector<IVec>& roots,
                 Part part = Part::Derived);
// dim of the centralizer of f inside the subalgebra, by direct kernel computation.
int centralizer_dim(const RootSystem& rs, const QMat& f, const std::vector<IVec>& roots, Part part);

struct NormalizeResult {
  WeylElement v;
  QMat gK;
  int steps = 0;
};
NormalizeResult normalize_coset(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const QMat& l,
                                const WeylElement& wel);

// sigma^j_1 = ((j+1) ... (n+1)) as a 0-indexed permutation of {0..n}.
std::vector<int> cg_sigma1(int n, int j);
// sigma^k_2 = (1 ... (n+1-k))^{-1}
std::vector<int> cg_sigma2(int n, int k);
std::pair<int, int> cg_orbit_correspondence(int n, int j, const QMat& b);
int gl_conjugation_orbit_dim(const QMat& b);

}  // namespace typea
}  // namespace leafatlas
