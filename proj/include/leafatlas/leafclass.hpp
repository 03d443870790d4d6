#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafatlas/decomp.hpp"
#include "leafatlas/weyl.hpp"

namespace leafatlas {

// constant + d_orb_coeff * d, where d is an orbit dimension left symbolic.
struct DimExpr {
  long constant = 0;
  int d_orb_coeff = 0;
  std::string str(const std::string& symbol = "d_orb") const;
  bool operator==(const DimExpr& o) const { return constant == o.constant && d_orb_coeff == o.d_orb_coeff; }
};

struct StableSubalgebra {
  std::vector<IVec> root_set;
  std::vector<IVec> partner_roots;  // pair case only: roots of the second stable algebra
  int dim = 0;
  int derived_dim = 0;
  int center_dim = 0;
  QMat lv_center;
  int cong_dim = 0;
  int moduli_dim = 0;
  // pair case only
  int z_dim = 0;
  int abelian_dim = 0;
};

struct LeafRecord {
  std::vector<WeylElement> v;  // one element, or the pair (v1, v2)
  StableSubalgebra stable;
  int length = 0;  // l(v) or l(v1) + l(v2)
  int dim_lv = 0;
  int cong_product_dim = 0;
  int orbit_dim_max = 0;
  DimExpr leaf_dim, coset_dim;
  // Full-Cartan form in terms of d_orb + cong (written d~).
  std::optional<DimExpr> simplified_leaf_dim;
};

struct FiniteAbelianGroup {
  std::vector<Z> invariant_factors;  // all > 1, each dividing the next
  int free_rank = 0;
  Z order() const;
  std::string str() const;
};

StableSubalgebra stable_subalgebra_v(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                     const WeylElement& v);
StableSubalgebra stable_subalgebra_pair(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                        const WeylElement& v1, const WeylElement& v2);
LeafRecord gminus_record(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const WeylElement& v);
LeafRecord g_record(const RootSystem& rs, const WeylGroup& w, const Decomposition& d, const WeylElement& v1,
                    const WeylElement& v2);
std::vector<LeafRecord> classify_gminus(const RootSystem& rs, const WeylGroup& w, const Decomposition& d);
std::vector<LeafRecord> classify_g(const RootSystem& rs, const WeylGroup& w, const Decomposition& d,
                                   bool require_simplified = false);

// rank((sigma - 1) on z(g_1)) with sigma = v1 theta^{-1} v2 theta.
int pair_cong_dim(const RootSystem& rs, const Decomposition& d, const StableSubalgebra& s, const WeylElement& v1,
                  const WeylElement& v2);

// Columns of a lattice basis for the lattice generated by rational columns.
QMat lattice_reduce(const QMat& gens);
// ker' / (ker' intersect (1 - theta) ker); ker' defaults to ker.
FiniteAbelianGroup sigma_group(const RootSystem& rs, const Decomposition& d, const Lattice& kernel,
                               const std::optional<Lattice>& kernel_prime = std::nullopt);
// Z^r / (Z^r intersect B Z^r) for a nonsingular rational B.
FiniteAbelianGroup lattice_quotient(const QMat& b);

}  // namespace leafatlas
