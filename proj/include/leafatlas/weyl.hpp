#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "leafatlas/rootsys.hpp"

namespace leafatlas {

struct WeylElement {
  IMat m;
  int length = 0;
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator<(const WeylElement& o) const { return m < o.m; }
};

// Simple-root index subset generating a standard parabolic subgroup.
using Parabolic = std::vector<int>;

// Enumeration cap; LEAFATLAS_WEYL_BOUND overrides the default of 10^6.
std::size_t weyl_bound();

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  const IMat& reflection(int i) const { return refl_[i]; }
  WeylElement identity() const;
  WeylElement make(const IMat& m) const;
  WeylElement mul(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  int length(const IMat& m) const;
  bool sends_positive(const IMat& m, const IVec& root) const;
  IVec apply(const WeylElement& w, const IVec& root) const { return w.m * root; }

  // All elements of the parabolic subgroup, sorted lexicographically by matrix.
  const std::vector<WeylElement>& elements(const Parabolic& gens) const;
  const std::vector<WeylElement>& all() const;
  bool contains(const Parabolic& gens, const WeylElement& w) const;
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;

 private:
  const RootSystem* rs_;
  QMat ginv_;
  std::vector<IMat> refl_;
  Parabolic full_;
  mutable std::map<Parabolic, std::vector<WeylElement>> cache_;
  mutable std::map<Parabolic, std::set<IMat>> members_;
};

std::vector<WeylElement> enumerate_weyl(const WeylGroup& w);
WeylElement longest_element(const WeylGroup& w, const Parabolic& p);
// w0 * (w0 of p)^{-1}: the longest minimal representative of W / W_p.
WeylElement longest_min_rep(const WeylGroup& w, const Parabolic& p);
// Criterion: w^{-1}(alpha_i) > 0 for i in left, w(alpha_j) > 0 for j in right.
bool is_min_double_rep(const WeylGroup& w, const WeylElement& x, const Parabolic& left, const Parabolic& right);
// One representative per double coset, sorted by (length, matrix).
std::vector<WeylElement> minimal_coset_reps(const WeylGroup& w, const Parabolic& left, const Parabolic& right);

struct MinDecomposition {
  WeylElement w1, w, w2;
};
// u = w1 w w2 with w minimal in W_left u W_right, w2 in W_right and w1 minimal
// in w1 (W_left intersect w W_right w^{-1}).
MinDecomposition decompose_min(const WeylGroup& w, const WeylElement& u, const Parabolic& left, const Parabolic& right);
// Simple roots i of left with w^{-1}(alpha_i) a simple root of right.
Parabolic stabilizer_generators(const WeylGroup& w, const WeylElement& x, const Parabolic& left, const Parabolic& right);

}  // namespace leafatlas
