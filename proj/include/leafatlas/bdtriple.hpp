#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leafatlas/rootsys.hpp"

namespace leafatlas {

struct BDTriple {
  std::vector<int> gamma1, gamma2;
  std::map<int, int> tau;
  int ord_tau = 0;
};

// Matrix R of r0 = sum R_ij t_i (x) t_j.
struct CartanTerm {
  QMat r0;
};

// Positive roots alpha for x_{-alpha} (x) x_alpha, and pairs (alpha, beta), alpha < beta,
// each giving x_{-alpha} (x) x_beta - x_beta (x) x_{-alpha}.
struct AbstractRMatrix {
  CartanTerm cartan;
  std::vector<IVec> diagonal_pairs;
  std::vector<std::pair<IVec, IVec>> wedge_pairs;
};

struct InductionStep {
  std::vector<int> ambient;
  BDTriple triple;
};

struct InductionChain {
  std::vector<InductionStep> steps;
  int length() const { return int(steps.size()) - 1; }
};

enum class R0Mode { Canonical, FromMatrix, MatchTheta };

struct R0Request {
  R0Mode mode = R0Mode::Canonical;
  // r0 itself for FromMatrix; the target Cayley transform on h for MatchTheta.
  QMat matrix;
};

BDTriple validate_triple(const RootSystem& rs, const std::vector<int>& gamma1, const std::vector<int>& gamma2,
                         const std::vector<std::pair<int, int>>& tau);
BDTriple trivial_triple();
// Cremmer-Gervais data on A_n: tau(alpha_j) = alpha_{j+1}.
BDTriple cremmer_gervais(const RootSystem& rs);

// Linear extension of tau to roots supported on gamma1.
std::optional<IVec> tau_root(const RootSystem& rs, const BDTriple& t, const IVec& alpha);
std::optional<IVec> tau_inverse_root(const RootSystem& rs, const BDTriple& t, const IVec& alpha);
std::vector<std::pair<IVec, IVec>> partial_order_pairs(const RootSystem& rs, const BDTriple& t);

QMat omega0(const RootSystem& rs);
CartanTerm solve_r0(const RootSystem& rs, const BDTriple& t, const R0Request& req = {});
// Residuals of the two defining constraints; both zero for an admissible r0.
QMat r0_symmetric_residual(const RootSystem& rs, const CartanTerm& c);
std::vector<QVec> r0_constraint_residuals(const RootSystem& rs, const BDTriple& t, const CartanTerm& c);
bool r0_admissible(const RootSystem& rs, const BDTriple& t, const CartanTerm& c);

AbstractRMatrix assemble_r(const RootSystem& rs, const BDTriple& t, const CartanTerm& r0);
InductionChain induction_chain(const RootSystem& rs, const BDTriple& t);

// Every valid triple on the root system, in a fixed order.
std::vector<BDTriple> all_valid_triples(const RootSystem& rs);

}  // namespace leafatlas
