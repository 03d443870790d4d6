#include "leafatlas/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "leafatlas/errors.hpp"

namespace leafatlas {

std::size_t weyl_bound() {
  if (const char* env = std::getenv("LEAFATLAS_WEYL_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return 1000000;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs), ginv_(*leafatlas::inverse(rs.gram)) {
  for (int i = 0; i < rs.ss_rank; ++i) {
    refl_.push_back(simple_reflection(rs, i));
    full_.push_back(i);
  }
}

WeylElement WeylGroup::identity() const { return {IMat::identity(rs_->cartan_rank), 0}; }

WeylElement WeylGroup::make(const IMat& m) const { return {m, length(m)}; }

WeylElement WeylGroup::mul(const WeylElement& a, const WeylElement& b) const { return make(a.m * b.m); }

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  // w preserves the form, so w^{-1} = G^{-1} w^T G
  IMat inv = to_int(ginv_ * a.m.transpose().to_q() * rs_->gram);
  return {inv, a.length};
}

bool WeylGroup::sends_positive(const IMat& m, const IVec& root) const {
  IVec img = m * root;
  for (int x : img)
    if (x) return x > 0;
  return false;
}

int WeylGroup::length(const IMat& m) const {
  int l = 0;
  for (const auto& p : rs_->positive_roots)
    if (!sends_positive(m, p)) ++l;
  return l;
}

const std::vector<WeylElement>& WeylGroup::elements(const Parabolic& gens_in) const {
  Parabolic gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto it = cache_.find(gens);
  if (it != cache_.end()) return it->second;
  for (int g : gens)
    if (g < 0 || g >= rs_->ss_rank) throw Error(ErrorCode::InvalidInput, "parabolic generator out of range");
  std::size_t bound = weyl_bound();
  std::set<IMat> seen{IMat::identity(rs_->cartan_rank)};
  std::deque<IMat> queue{IMat::identity(rs_->cartan_rank)};
  while (!queue.empty()) {
    IMat cur = queue.front();
    queue.pop_front();
    for (int g : gens) {
      IMat next = cur * refl_[g];
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw Error(ErrorCode::BoundExceeded, "Weyl group larger than " + std::to_string(bound));
        queue.push_back(next);
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(make(m));
  members_[gens] = std::move(seen);
  return cache_[gens] = std::move(out);
}

const std::vector<WeylElement>& WeylGroup::all() const { return elements(full_); }

bool WeylGroup::contains(const Parabolic& gens_in, const WeylElement& w) const {
  Parabolic gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  elements(gens);
  return members_.at(gens).count(w.m) > 0;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  IMat cur = w.m;
  while (true) {
    int found = -1;
    for (int i = 0; i < rs_->ss_rank && found < 0; ++i)
      if (!sends_positive(cur, rs_->simple_roots[i])) found = i;
    if (found < 0) break;
    cur = cur * refl_[found];
    word.push_back(found);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  IMat m = IMat::identity(rs_->cartan_rank);
  for (int i : word) {
    if (i < 0 || i >= rs_->ss_rank) throw Error(ErrorCode::InvalidInput, "reflection index out of range");
    m = m * refl_[i];
  }
  return make(m);
}

std::vector<WeylElement> enumerate_weyl(const WeylGroup& w) { return w.all(); }

WeylElement longest_element(const WeylGroup& w, const Parabolic& p) {
  const auto& els = w.elements(p);
  return *std::max_element(els.begin(), els.end(),
                           [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
}

WeylElement longest_min_rep(const WeylGroup& w, const Parabolic& p) {
  Parabolic full;
  for (int i = 0; i < w.root_system().ss_rank; ++i) full.push_back(i);
  WeylElement w0 = longest_element(w, full);
  return w.mul(w0, w.inverse(longest_element(w, p)));
}

bool is_min_double_rep(const WeylGroup& w, const WeylElement& x, const Parabolic& left, const Parabolic& right) {
  const auto& rs = w.root_system();
  for (int j : right)
    if (!w.sends_positive(x.m, rs.simple_roots[j])) return false;
  if (!left.empty()) {
    WeylElement inv = w.inverse(x);
    for (int i : left)
      if (!w.sends_positive(inv.m, rs.simple_roots[i])) return false;
  }
  return true;
}

std::vector<WeylElement> minimal_coset_reps(const WeylGroup& w, const Parabolic& left, const Parabolic& right) {
  std::vector<WeylElement> out;
  for (const auto& x : w.all())
    if (is_min_double_rep(w, x, left, right)) out.push_back(x);
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length != b.length ? a.length < b.length : a.m < b.m;
  });
  return out;
}

Parabolic stabilizer_generators(const WeylGroup& w, const WeylElement& x, const Parabolic& left, const Parabolic& right) {
  const auto& rs = w.root_system();
  WeylElement inv = w.inverse(x);
  Parabolic out;
  for (int i : left) {
    IVec img = inv.m * rs.simple_roots[i];
    for (int j : right)
      if (img == rs.simple_roots[j]) out.push_back(i);
  }
  return out;
}

MinDecomposition decompose_min(const WeylGroup& w, const WeylElement& u, const Parabolic& left, const Parabolic& right) {
  const auto& rs = w.root_system();
  WeylElement x = u;
  bool moved = true;
  while (moved) {
    moved = false;
    WeylElement inv = w.inverse(x);
    for (int i : left)
      if (!w.sends_positive(inv.m, rs.simple_roots[i])) {
        x = w.make(w.reflection(i) * x.m);
        moved = true;
        break;
      }
    if (moved) continue;
    for (int j : right)
      if (!w.sends_positive(x.m, rs.simple_roots[j])) {
        x = w.make(x.m * w.reflection(j));
        moved = true;
        break;
      }
  }
  Parabolic stab = stabilizer_generators(w, x, left, right);
  WeylElement xinv = w.inverse(x);
  for (const auto& w2 : w.elements(right)) {
    WeylElement w1 = w.make(u.m * w.inverse(w2).m * xinv.m);
    if (!w.contains(left, w1)) continue;
    bool minimal = true;
    for (int k : stab)
      if (!w.sends_positive(w1.m, rs.simple_roots[k])) minimal = false;
    if (!minimal) continue;
    if (w1.length + x.length + w2.length != u.length)
      throw Error(ErrorCode::InvariantViolation, "lengths do not add in decompose_min");
    return {w1, x, w2};
  }
  throw Error(ErrorCode::InvariantViolation, "no decomposition found");
}

}  // namespace leafatlas
