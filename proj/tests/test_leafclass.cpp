#include <map>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "leafatlas/errors.hpp"
#include "leafatlas/leafclass.hpp"
#include "leafatlas/typea.hpp"

using namespace leafatlas;

namespace {

Decomposition canonical(const RootSystem& rs, const BDTriple& t) { return compute_decomposition(rs, t, solve_r0(rs, t)); }

// Roots epsilon_p - epsilon_q with p != q in [lo, lo + m).
std::set<IVec> block_roots(const RootSystem& rs, int lo, int m) {
  std::set<IVec> out;
  for (const auto& r : rs.roots) {
    auto [p, q] = typea::root_positions(r);
    if (p >= lo && p < lo + m && q >= lo && q < lo + m) out.insert(r);
  }
  return out;
}

std::set<IVec> as_set(const std::vector<IVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("standard structure on SL(2) and SL(3)") {
  for (int n = 1; n <= 2; ++n) {
    RootSystem rs = build_root_system("A" + std::to_string(n));
    WeylGroup w(rs);
    Decomposition d = canonical(rs, trivial_triple());
    auto recs = classify_gminus(rs, w, d);
    CHECK(recs.size() == w.all().size());
    int dim_b = n + n * (n + 1) / 2;
    for (const auto& r : recs) {
      CHECK(r.stable.root_set.empty());
      CHECK(r.stable.dim == n);
      int cong = int(rank(r.v[0].m.to_q() - QMat::identity(n)));
      CHECK(r.stable.cong_dim == cong);
      CHECK(r.coset_dim == DimExpr{dim_b + r.v[0].length + cong, 0});
    }
    if (n == 1) {
      CHECK(recs[0].coset_dim.constant == 2);
      CHECK(recs[1].coset_dim.constant == 4);
    }
    auto full = classify_g(rs, w, d, true);
    CHECK(full.size() == w.all().size() * w.all().size());
    for (const auto& r : full) {
      // torus twisted orbit: rank(v1 v2 - 1) on h, theta = -1
      int torus = int(rank((r.v[0].m * r.v[1].m).to_q() - QMat::identity(n)));
      CHECK(r.leaf_dim == DimExpr{r.v[0].length + r.v[1].length + torus, 0});
    }
  }
}

TEST_CASE("Cremmer-Gervais classification of G-minus leaves") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    RootSystem rs = build_root_system("A" + std::to_string(n));
    WeylGroup w(rs);
    Decomposition d = canonical(rs, testutil::cg_triple(rs));
    auto recs = classify_gminus(rs, w, d);
    REQUIRE(int(recs.size()) == n + 1);
    std::set<int> js;
    for (const auto& r : recs) {
      auto perm = typea::weyl_to_perm(rs, r.v[0]);
      int j = perm[n];
      js.insert(j);
      CHECK(perm == typea::cg_sigma1(n, j));
      CHECK(r.length == n - j);
      CHECK(as_set(r.stable.root_set) == block_roots(rs, 0, j));
      CHECK(r.coset_dim.constant == n * (n + 1) + (n - j) * (n + j + 1));
      // the GL(j) conjugation orbit is a point for j <= 1
      CHECK(r.coset_dim.d_orb_coeff == (j >= 2 ? 1 : 0));
      CHECK(r.coset_dim.constant - r.leaf_dim.constant == d.dim_gplus);
      REQUIRE(r.simplified_leaf_dim);
      CHECK(r.simplified_leaf_dim->constant + r.stable.cong_dim == r.leaf_dim.constant);
    }
    CHECK(int(js.size()) == n + 1);
  }
}

TEST_CASE("Cremmer-Gervais classification of G leaves") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    RootSystem rs = build_root_system("A" + std::to_string(n));
    WeylGroup w(rs);
    Decomposition d = canonical(rs, testutil::cg_triple(rs));
    auto recs = classify_g(rs, w, d, true);
    REQUIRE(int(recs.size()) == (n + 1) * (n + 1));
    for (const auto& r : recs) {
      auto p1 = typea::weyl_to_perm(rs, r.v[0]);
      auto p2 = typea::weyl_to_perm(rs, r.v[1]);
      int j = p1[n];
      int k = n - p2[0];
      CAPTURE(j);
      CAPTURE(k);
      CHECK(p1 == typea::cg_sigma1(n, j));
      CHECK(p2 == typea::cg_sigma2(n, k));
      long expect;
      std::set<IVec> block;
      if (j + k >= n) {
        expect = long(2 * n - j - k) * (j + k + 1);
        block = block_roots(rs, n - k, j + k - n);
      } else {
        expect = long(2 * n - j - k - 2) * (j + k + 1) + 2 * n;
        block = block_roots(rs, j + 1, n - j - k - 1);
      }
      CHECK(r.leaf_dim.constant == expect);
      CHECK(r.leaf_dim.d_orb_coeff == (block.empty() ? 0 : 1));
      CHECK(as_set(r.stable.root_set) == block);
    }
  }
}

TEST_CASE("record properties over all valid triples") {
  for (const char* label : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "A2xA1"}) {
    RootSystem rs = build_root_system(label);
    WeylGroup w(rs);
    for (const auto& t : all_valid_triples(rs)) {
      CAPTURE(label);
      CAPTURE(t.gamma1.size());
      Decomposition d = canonical(rs, t);
      auto gm = classify_gminus(rs, w, d);
      auto gf = classify_g(rs, w, d);
      CHECK(gm.size() * w.elements(t.gamma1).size() == w.all().size());
      CHECK(gf.size() == gm.size() * gm.size());
      for (const auto& r : gm) {
        const auto& s = r.stable;
        std::set<IVec> rset = as_set(s.root_set);
        // closed under v, v^{-1} and negation, inside l_1
        WeylElement vinv = w.inverse(r.v[0]);
        for (const auto& a : s.root_set) {
          CHECK(rset.count(r.v[0].m * a));
          CHECK(rset.count(vinv.m * a));
          CHECK(rset.count(negate(a)));
          CHECK(std::find(d.levi1_roots.begin(), d.levi1_roots.end(), a) != d.levi1_roots.end());
          for (int i : rs.support(a)) CHECK(rset.count(rs.simple_roots[i]));
        }
        CHECK(s.dim == rs.cartan_rank + int(s.root_set.size()));
        CHECK(s.derived_dim + s.center_dim == s.dim);
        // v is minimal in W^v v W_1
        std::vector<int> simple;
        for (int i = 0; i < rs.ss_rank; ++i)
          if (rset.count(rs.simple_roots[i])) simple.push_back(i);
        MinDecomposition md = decompose_min(w, r.v[0], simple, t.gamma1);
        CHECK(md.w == r.v[0]);
        CHECK(r.coset_dim.constant - r.leaf_dim.constant == d.dim_gplus);
        CHECK(r.coset_dim.d_orb_coeff == r.leaf_dim.d_orb_coeff);
        CHECK(r.leaf_dim.constant >= 0);
        CHECK(r.leaf_dim.constant + long(r.orbit_dim_max) <= d.dim_gminus);
      }
      std::set<long> offsets;
      for (const auto& r : gf) {
        offsets.insert(r.coset_dim.constant - r.leaf_dim.constant);
        if (r.v[1].length == 0) {
          StableSubalgebra single = stable_subalgebra_v(rs, w, d, r.v[0]);
          CHECK(single.root_set == r.stable.root_set);
        }
        CHECK(r.leaf_dim.constant >= 0);
        CHECK(r.stable.abelian_dim == r.stable.center_dim - pair_cong_dim(rs, d, r.stable, r.v[0], r.v[1]));
      }
      CHECK(offsets.size() == 1);
    }
  }
}

TEST_CASE("minimality is enforced") {
  RootSystem rs = build_root_system("A2");
  WeylGroup w(rs);
  Decomposition d = canonical(rs, testutil::cg_triple(rs));
  WeylElement s1 = w.from_word({0});
  try {
    stable_subalgebra_v(rs, w, d, s1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMinimalRep);
  }
  CHECK_THROWS_AS(stable_subalgebra_pair(rs, w, d, w.identity(), w.from_word({1})), Error);
}

TEST_CASE("sigma for standard and Cremmer-Gervais structures") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem rs = build_root_system("A" + std::to_string(n));
    Lattice ker = exp_kernel_lattice(rs);
    FiniteAbelianGroup st = sigma_group(rs, canonical(rs, trivial_triple()), ker);
    CHECK(st.invariant_factors == std::vector<Z>(n, Z(2)));
    FiniteAbelianGroup cg = sigma_group(rs, canonical(rs, testutil::cg_triple(rs)), ker);
    CHECK(cg.invariant_factors == std::vector<Z>{Z(n + 1)});
    CHECK(cg.order() == n + 1);
  }
  // Z2^rank for other types too, with theta = -1
  for (const char* label : {"B2", "G2", "D4"}) {
    RootSystem rs = build_root_system(label);
    FiniteAbelianGroup st = sigma_group(rs, canonical(rs, trivial_triple()), exp_kernel_lattice(rs));
    CHECK(st.invariant_factors == std::vector<Z>(rs.ss_rank, Z(2)));
  }
  FiniteAbelianGroup trivial = lattice_quotient(QMat::identity(3));
  CHECK(trivial.invariant_factors.empty());
  CHECK(trivial.str() == "0");
  CHECK(trivial.order() == 1);
}

TEST_CASE("lattice quotient agrees with brute-force enumeration") {
  std::mt19937 rng(21);
  int tested = 0;
  while (tested < 120) {
    int n = 1 + tested % 3;
    QMat b = tested % 2 ? testutil::random_int_matrix(rng, n, n, -10, 10) : testutil::random_rational_matrix(rng, n, n);
    if (det(b) == 0) continue;
    ++tested;
    FiniteAbelianGroup g = lattice_quotient(b);
    testutil::BruteGroup brute = testutil::brute_quotient(b);
    CHECK(g.order() == Z(brute.order));
    for (const auto& [dd, c] : brute.killed) CHECK(testutil::killed_by(g, dd) == c);
    for (std::size_t k = 1; k < g.invariant_factors.size(); ++k)
      CHECK(g.invariant_factors[k] % g.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("lattice reduction keeps the generated lattice") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    QMat gens = testutil::random_rational_matrix(rng, 2 + trial % 2, 3 + trial % 3);
    QMat basis = lattice_reduce(gens);
    CHECK(rank(basis) == basis.cols());
    CHECK(basis.cols() == rank(gens));
    // every generator has integer coordinates in the basis
    QMat c = coords_in(basis, gens);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) CHECK(c(i, j).get_den() == 1);
    // and the index of the generated lattice in the basis lattice is 1
    std::vector<std::vector<Z>> rows(c.rows(), std::vector<Z>(c.cols()));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) rows[i][j] = c(i, j).get_num();
    for (const auto& f : smith_invariants(rows)) CHECK(f == 1);
  }
}

TEST_CASE("degenerate Cartan data") {
  RootSystemOptions o;
  o.torus_gram = parse_matrix("1 0\n0 -1\n");
  o.kernel = QMat::identity(3);
  RootSystem rs = build_root_system("A1+T2", o);
  WeylGroup w(rs);
  CartanTerm r0{parse_matrix("1/4 0 0\n0 1/2 1/2\n0 -1/2 -1/2\n")};
  Decomposition d = compute_decomposition(rs, trivial_triple(), r0);
  REQUIRE_FALSE(full_h_predicate(d));
  try {
    sigma_group(rs, d, exp_kernel_lattice(rs));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThetaMinusOneSingular);
  }
  try {
    classify_g(rs, w, d, true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SimplifiedPathUnavailable);
  }
  auto gm = classify_gminus(rs, w, d);
  auto gf = classify_g(rs, w, d);
  CHECK(gm.size() == 2);
  CHECK(gf.size() == 4);
  for (const auto& r : gm) {
    CHECK_FALSE(r.simplified_leaf_dim);
    CHECK(r.coset_dim.constant - r.leaf_dim.constant == d.dim_gplus);
  }
  for (const auto& r : gf) CHECK_FALSE(r.simplified_leaf_dim);
}

TEST_CASE("non full rank kernel is rejected") {
  RootSystem rs = build_root_system("A2");
  Decomposition d = canonical(rs, trivial_triple());
  Lattice thin{parse_matrix("1\n0\n")};
  try {
    sigma_group(rs, d, thin);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommensurableLattices);
  }
}
