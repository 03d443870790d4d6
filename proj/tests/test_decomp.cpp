#include "doctest.h"
#include "helpers.hpp"
#include "leafatlas/decomp.hpp"
#include "leafatlas/errors.hpp"

using namespace leafatlas;

namespace {

Decomposition canonical(const RootSystem& rs, const BDTriple& t) { return compute_decomposition(rs, t, solve_r0(rs, t)); }

// Hyperbolic torus block and a skew part making 1 - f singular there.
struct Degenerate {
  RootSystem rs;
  CartanTerm r0;
};
Degenerate degenerate_case() {
  RootSystemOptions o;
  o.torus_gram = parse_matrix("1 0\n0 -1\n");
  Degenerate dg{build_root_system("A1+T2", o), {}};
  dg.r0.r0 = parse_matrix("1/4 0 0\n0 1/2 1/2\n0 -1/2 -1/2\n");
  return dg;
}

}  // namespace

TEST_CASE("standard structure") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem rs = build_root_system("A" + std::to_string(n));
    Decomposition d = canonical(rs, trivial_triple());
    CHECK(d.n_plus_roots.size() == rs.positive_roots.size());
    CHECK(d.n_minus_roots.size() == rs.positive_roots.size());
    CHECK(d.h_ort1.cols() == 0);
    CHECK(d.h_ort2.cols() == 0);
    CHECK(int(d.a1.cols()) == n);
    CHECK(int(d.a2.cols()) == n);
    CHECK(d.theta_matrix() == QMat::identity(n) * Q(-1));
    CHECK(full_h_predicate(d));
    CHECK(d.dim_gplus == n + n * (n + 1) / 2);
  }
}

TEST_CASE("Cremmer-Gervais structure") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem rs = build_root_system("A" + std::to_string(n));
    Decomposition d = canonical(rs, testutil::cg_triple(rs));
    CHECK(full_h_predicate(d));
    // l_1 = gl(n) block: n(n-1) roots
    CHECK(int(d.levi1_roots.size()) == n * (n - 1));
    // g_+ is the full parabolic: gl(n) block plus the last column
    CHECK(d.dim_gplus == n * (n + 1));
    CHECK(d.dim_gplus + d.dim_mplus == (n + 1) * (n + 1) - 1);
    CHECK(d.dim_l1a1 == n * n);
  }
}

TEST_CASE("A2 single edge bookkeeping") {
  RootSystem rs = build_root_system("A2");
  Decomposition d = canonical(rs, testutil::cg_triple(rs));
  CHECK(d.dim_g == 8);
  CHECK(d.dim_gplus + d.dim_mplus == 8);
  CHECK(d.dim_gminus + d.dim_mminus == 8);
  CHECK(d.h_ort1.cols() == 0);
}

TEST_CASE("decomposition invariants over all valid triples") {
  for (const char* label : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3", "A2xA1"}) {
    RootSystem rs = build_root_system(label);
    for (const auto& t : all_valid_triples(rs)) {
      CAPTURE(label);
      CAPTURE(t.gamma1.size());
      Decomposition d = canonical(rs, t);
      for (const auto& c : decomposition_checks(rs, d)) {
        CAPTURE(c.name);
        CHECK(c.ok);
      }
      int c = rs.cartan_rank;
      QMat one = QMat::identity(c);
      QMat f = d.r0.r0 * rs.gram;
      CHECK(d.f_cartan == f);
      // dim g_+ = dim(l'_1 + a_1) + dim h_ort1 + |n_+|
      CHECK(d.dim_gplus == d.dim_l1a1 + int(d.h_ort1.cols()) + int(d.n_plus_roots.size()));
      CHECK(d.dim_gminus == d.dim_l1a1 + int(d.h_ort2.cols()) + int(d.n_minus_roots.size()));
      CHECK(2 * d.dim_gplus == d.dim_g + d.dim_l1a1);
      CHECK(span_contains(d.h1, d.h_ort1));
      CHECK(span_contains(d.h2, d.h_ort2));
      REQUIRE(full_h_predicate(d));
      QMat th = d.theta_matrix();
      // theta = -f (1 - f)^{-1}
      CHECK(th * (one - f) == -f);
      CHECK(th.transpose() * rs.gram * th == rs.gram);
      for (const auto& [a, b] : t.tau) {
        QVec ea(c), eb(c);
        ea[a] = 1;
        eb[b] = 1;
        CHECK(th * ea == eb);
      }
      for (const auto& [alpha, beta] : d.theta_roots) {
        auto tb = tau_root(rs, t, alpha);
        REQUIRE(tb);
        CHECK(*tb == beta);
      }
      CHECK(d.theta_inverse_matrix() * th == one);
    }
  }
}

TEST_CASE("full_h fails for a degenerate skew part on a hyperbolic torus") {
  Degenerate dg = degenerate_case();
  CHECK(r0_admissible(dg.rs, trivial_triple(), dg.r0));
  Decomposition d = compute_decomposition(dg.rs, trivial_triple(), dg.r0);
  CHECK_FALSE(full_h_predicate(d));
  CHECK(d.h_ort1.cols() == 1);
  CHECK(d.h_ort2.cols() == 1);
  for (const auto& c : decomposition_checks(dg.rs, d)) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  CHECK(d.dim_gplus == d.dim_l1a1 + 1 + int(d.n_plus_roots.size()));
  CHECK(2 * d.dim_gplus == d.dim_g + d.dim_l1a1);
  CHECK_THROWS_AS(d.theta_matrix(), Error);
}
