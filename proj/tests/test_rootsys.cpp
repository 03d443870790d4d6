#include "doctest.h"
#include "helpers.hpp"
#include "leafatlas/errors.hpp"

using namespace leafatlas;

namespace {

// Leading principal minors, independent of the library's rank code.
bool positive_definite(const QMat& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    QMat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
    if (testutil::cofactor_det(m) <= 0) return false;
  }
  return true;
}

// Positive roots by repeatedly reflecting in simple roots, using only the Cartan integers.
std::set<IVec> closure_oracle(const RootSystem& rs) {
  int n = rs.ss_rank;
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Q c = 2 * rs.gram(i, j) / rs.gram(j, j);
      cartan[i][j] = int(c.get_num().get_si());
    }
  std::set<IVec> roots;
  std::vector<IVec> todo;
  for (int i = 0; i < n; ++i) {
    IVec e(rs.cartan_rank, 0);
    e[i] = 1;
    roots.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec r = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      int pair = 0;  // <r, alpha_j^vee>
      for (int i = 0; i < n; ++i) pair += r[i] * cartan[i][j];
      IVec s = r;
      s[j] -= pair;
      bool pos = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
      bool nonzero = std::any_of(s.begin(), s.end(), [](int x) { return x != 0; });
      if (pos && nonzero && roots.insert(s).second) todo.push_back(s);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("positive root counts") {
  struct Case {
    const char* label;
    int count;
  } cases[] = {{"A1", 1}, {"A2", 3}, {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},  {"C3", 9},
               {"D4", 12}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"A2xA1", 4}};
  for (const auto& c : cases) {
    CAPTURE(c.label);
    RootSystem rs = build_root_system(c.label);
    CHECK(rs.num_positive() == c.count);
    CHECK(rs.roots.size() == 2 * rs.positive_roots.size());
    std::set<IVec> got(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(got == closure_oracle(rs));
  }
  for (int n = 1; n <= 6; ++n) CHECK(build_root_system("A" + std::to_string(n)).num_positive() == n * (n + 1) / 2);
}

TEST_CASE("invariant form normalization") {
  RootSystem a1 = build_root_system("A1");
  CHECK(a1.gram.rows() == 1);
  CHECK(a1.gram(0, 0) == 2);
  RootSystem a2 = build_root_system("A2");
  CHECK(form_pairing(a2, IVec{1, 0}, IVec{1, 0}) == 2);
  CHECK(form_pairing(a2, IVec{1, 0}, IVec{0, 1}) == -1);
  RootSystem a1a1 = build_root_system("A1xA1");
  CHECK(form_pairing(a1a1, IVec{1, 0}, IVec{0, 1}) == 0);
  CHECK_THROWS_AS(form_pairing(a2, IVec{1}, IVec{1, 0}), Error);

  for (const char* label : {"A3", "B3", "C3", "D5", "G2", "F4", "E6", "B2xG2"}) {
    CAPTURE(label);
    RootSystem rs = build_root_system(label);
    CHECK(rs.gram == rs.gram.transpose());
    CHECK(positive_definite(rs.gram));
    // long roots have square length 2
    Q longest = 0;
    for (const auto& r : rs.positive_roots) longest = std::max(longest, form_pairing(rs, r, r));
    CHECK(longest == 2);
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (const char* label : {"A3", "B3", "C4", "D4", "G2", "F4"}) {
    CAPTURE(label);
    RootSystem rs = build_root_system(label);
    for (int i = 0; i < rs.ss_rank; ++i) {
      IMat s = simple_reflection(rs, i);
      std::set<IVec> before, after;
      for (const auto& r : rs.positive_roots) {
        if (r == rs.simple_roots[i]) {
          CHECK(s * r == negate(r));
          continue;
        }
        before.insert(r);
        after.insert(s * r);
      }
      CHECK(before == after);
      CHECK(s.to_q().transpose() * rs.gram * s.to_q() == rs.gram);
    }
  }
}

TEST_CASE("labels") {
  CHECK_THROWS_AS(build_root_system("X3"), Error);
  CHECK_THROWS_AS(build_root_system("E5"), Error);
  CHECK_THROWS_AS(build_root_system("G3"), Error);
  CHECK_THROWS_AS(build_root_system("A0"), Error);
  CHECK_THROWS_AS(build_root_system(""), Error);
  try {
    build_root_system("F3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidLabel);
  }
  RootSystem rs = build_root_system("A2xB2+T1");
  CHECK(rs.ss_rank == 4);
  CHECK(rs.torus_rank == 1);
  CHECK(rs.cartan_rank == 5);
  CHECK(rs.gram(4, 4) == 1);
  CHECK(rs.dim() == 5 + 2 * (3 + 4));
  CHECK(is_type_a(build_root_system("A3")));
  CHECK_FALSE(is_type_a(build_root_system("A1xA1")));
  CHECK_FALSE(is_type_a(build_root_system("A1+T1")));
}

TEST_CASE("kernel lattice") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem rs = build_root_system("A" + std::to_string(n));
    Lattice k = exp_kernel_lattice(rs);
    CHECK(k.basis == QMat::identity(n));
  }
  // B2: the short simple coroot is twice the root
  Lattice b2 = exp_kernel_lattice(build_root_system("B2"));
  CHECK(b2.basis(0, 0) == 1);
  CHECK(b2.basis(1, 1) == 2);

  RootSystem t = build_root_system("A1+T1");
  try {
    exp_kernel_lattice(t);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingKernel);
  }
  RootSystemOptions o;
  o.kernel = parse_matrix("1 0\n0 3\n");
  RootSystem t2 = build_root_system("A1+T1", o);
  CHECK(exp_kernel_lattice(t2).basis == *o.kernel);

  RootSystemOptions g;
  g.torus_gram = parse_matrix("0 1\n1 0\n");
  RootSystem h = build_root_system("A1+T2", g);
  CHECK(h.gram(1, 2) == 1);
  CHECK(h.gram(1, 1) == 0);
}
