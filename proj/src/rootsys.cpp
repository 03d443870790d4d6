#include "leafatlas/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>

#include "leafatlas/errors.hpp"

namespace leafatlas {

namespace {

// Symmetrized Cartan matrix of one simple component, long roots of squared length 2.
QMat component_gram(char letter, int n) {
  QMat g(n, n);
  auto link = [&](int i, int j, const Q& v) { g(i, j) = v, g(j, i) = v; };
  switch (letter) {
    case 'A':
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      if (n > 1) g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g(i, i) = 1;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Q(-1, 2));
      if (n > 1) link(n - 2, n - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      if (n >= 3) link(n - 3, n - 1, -1);
      break;
    case 'E': {
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    }
    case 'F':
      g(0, 0) = 2, g(1, 1) = 2, g(2, 2) = 1, g(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Q(-1, 2));
      break;
    case 'G':
      g(0, 0) = Q(2, 3), g(1, 1) = 2;
      link(0, 1, -1);
      break;
    default:
      throw Error(ErrorCode::InvalidLabel, std::string("unknown type letter ") + letter);
  }
  return g;
}

void check_rank(char letter, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidLabel, "rank must be at least 1");
  if (letter == 'E' && (n < 6 || n > 8)) throw Error(ErrorCode::InvalidLabel, "E needs rank 6, 7 or 8");
  if (letter == 'F' && n != 4) throw Error(ErrorCode::InvalidLabel, "F needs rank 4");
  if (letter == 'G' && n != 2) throw Error(ErrorCode::InvalidLabel, "G needs rank 2");
  if (letter == 'D' && n < 2) throw Error(ErrorCode::InvalidLabel, "D needs rank at least 2");
}

}  // namespace

int RootSystem::root_index(const IVec& v) const {
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const IVec& v) const {
  int k = root_index(v);
  return k >= 0 && k < num_positive();
}

int RootSystem::height(const IVec& v) const {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

std::vector<int> RootSystem::support(const IVec& v) const {
  std::vector<int> s;
  for (int i = 0; i < int(v.size()); ++i)
    if (v[i]) s.push_back(i);
  return s;
}

QVec to_q(const IVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

IVec negate(const IVec& v) {
  IVec n(v);
  for (int& x : n) x = -x;
  return n;
}

IMat simple_reflection(const RootSystem& rs, int i) {
  int c = rs.cartan_rank;
  IMat s = IMat::identity(c);
  for (int k = 0; k < rs.ss_rank; ++k) {
    Q coef = 2 * rs.gram(k, i) / rs.gram(i, i);
    if (coef.get_den() != 1) throw Error(ErrorCode::InvalidLabel, "non-integral Cartan entry");
    s(i, k) -= int(coef.get_num().get_si());
  }
  return s;
}

RootSystem build_root_system(const std::string& label, const RootSystemOptions& opts) {
  RootSystem rs;
  rs.label = label;
  rs.options = opts;
  static const std::regex whole(R"(^\s*([A-Ga-g]\d+(\s*[xX]\s*[A-Ga-g]\d+)*)?\s*(\+\s*[Tt](\d+))?\s*$)");
  static const std::regex part(R"(([A-Ga-g])(\d+))");
  std::smatch m;
  if (!std::regex_match(label, m, whole) || (m[1].length() == 0 && m[3].length() == 0))
    throw Error(ErrorCode::InvalidLabel, "cannot parse root system label '" + label + "'");
  std::string comps = m[1].str();
  if (m[4].matched) rs.torus_rank = std::stoi(m[4].str());
  for (auto it = std::sregex_iterator(comps.begin(), comps.end(), part); it != std::sregex_iterator(); ++it) {
    char letter = char(std::toupper((*it)[1].str()[0]));
    int n = std::stoi((*it)[2].str());
    check_rank(letter, n);
    rs.components.emplace_back(letter, n);
    rs.ss_rank += n;
  }
  if (rs.components.empty() && rs.torus_rank == 0) throw Error(ErrorCode::InvalidLabel, "empty root system");
  rs.cartan_rank = rs.ss_rank + rs.torus_rank;
  rs.gram = QMat(rs.cartan_rank, rs.cartan_rank);
  int off = 0;
  for (auto [letter, n] : rs.components) {
    QMat g = component_gram(letter, n);
    if ((letter == 'B' || letter == 'C') && n == 1) g(0, 0) = 2;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.gram(off + i, off + j) = g(i, j);
    off += n;
  }
  if (opts.torus_gram) {
    const QMat& t = *opts.torus_gram;
    if (int(t.rows()) != rs.torus_rank || int(t.cols()) != rs.torus_rank)
      throw Error(ErrorCode::DimensionMismatch, "torus gram size");
    if (t != t.transpose() || !inverse(t)) throw Error(ErrorCode::InvalidInput, "torus gram must be symmetric nondegenerate");
    for (int i = 0; i < rs.torus_rank; ++i)
      for (int j = 0; j < rs.torus_rank; ++j) rs.gram(off + i, off + j) = t(i, j);
  } else {
    for (int i = 0; i < rs.torus_rank; ++i) rs.gram(off + i, off + i) = 1;
  }

  for (int i = 0; i < rs.ss_rank; ++i) {
    IVec e(rs.cartan_rank, 0);
    e[i] = 1;
    rs.simple_roots.push_back(e);
  }
  std::vector<IMat> refl;
  for (int i = 0; i < rs.ss_rank; ++i) refl.push_back(simple_reflection(rs, i));
  std::set<IVec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<IVec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    IVec v = queue.front();
    queue.pop_front();
    for (const auto& s : refl) {
      IVec w = s * v;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) rs.positive_roots.push_back(v);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const IVec& a, const IVec& b) {
    int ha = rs.height(a), hb = rs.height(b);
    return ha != hb ? ha < hb : a > b;
  });
  rs.roots = rs.positive_roots;
  for (const auto& p : rs.positive_roots) rs.roots.push_back(negate(p));
  for (int k = 0; k < int(rs.roots.size()); ++k) rs.index[rs.roots[k]] = k;
  return rs;
}

Q form_pairing(const RootSystem& rs, const QVec& x, const QVec& y) {
  if (int(x.size()) != rs.cartan_rank || int(y.size()) != rs.cartan_rank)
    throw Error(ErrorCode::DimensionMismatch, "form_pairing expects vectors of length " + std::to_string(rs.cartan_rank));
  QVec gy = rs.gram * y;
  Q s = 0;
  for (int i = 0; i < rs.cartan_rank; ++i) s += x[i] * gy[i];
  return s;
}

Q form_pairing(const RootSystem& rs, const IVec& x, const IVec& y) { return form_pairing(rs, to_q(x), to_q(y)); }

Lattice exp_kernel_lattice(const RootSystem& rs) {
  if (rs.options.kernel) {
    if (int(rs.options.kernel->rows()) != rs.cartan_rank) throw Error(ErrorCode::DimensionMismatch, "kernel lattice rows");
    return Lattice{*rs.options.kernel};
  }
  if (rs.torus_rank > 0) throw Error(ErrorCode::MissingKernel, "central torus needs user-supplied kernel data");
  QMat b(rs.cartan_rank, rs.cartan_rank);
  for (int i = 0; i < rs.cartan_rank; ++i) b(i, i) = 2 / rs.gram(i, i);
  return Lattice{b};
}

Q evaluate_root(const RootSystem& rs, const IVec& alpha, const QVec& x) { return form_pairing(rs, to_q(alpha), x); }

QMat root_functionals(const RootSystem& rs, const std::vector<IVec>& alphas) {
  QMat m(alphas.size(), rs.cartan_rank);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    QVec row = rs.gram.transpose() * to_q(alphas[k]);
    for (int j = 0; j < rs.cartan_rank; ++j) m(k, j) = row[j];
  }
  return m;
}

QMat simple_coroot_span(const RootSystem& rs, const std::vector<int>& simple) {
  QMat m(rs.cartan_rank, simple.size());
  for (std::size_t k = 0; k < simple.size(); ++k) m(simple[k], k) = 1;
  return m;
}

std::vector<IVec> levi_roots(const RootSystem& rs, const std::vector<int>& simple, bool positive_only) {
  std::vector<bool> in(rs.cartan_rank, false);
  for (int i : simple) in[i] = true;
  std::vector<IVec> out;
  std::size_t lim = positive_only ? rs.positive_roots.size() : rs.roots.size();
  for (std::size_t k = 0; k < lim; ++k) {
    const IVec& r = rs.roots[k];
    bool ok = true;
    for (int i = 0; i < rs.cartan_rank && ok; ++i)
      if (r[i] && !in[i]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

bool is_type_a(const RootSystem& rs) {
  return rs.components.size() == 1 && rs.components[0].first == 'A' && rs.torus_rank == 0;
}

}  // namespace leafatlas
