#pragma once

// Predicates and functionals on families of subsets: antichain, flat, full and
// maximal flat antichains, profile vectors, weights, BLYM values, and the
// profile flattening transfer.

#include <optional>
#include <vector>

#include "flatchain/errors.hpp"
#include "flatchain/numeric.hpp"
#include "flatchain/subsets.hpp"

namespace flatchain {

/// Level counts (a_0, ..., a_n). Intermediate vectors of the flattening
/// procedure need not be realizable by an antichain.
struct ProfileVector {
  int n = 0;
  std::vector<BigInt> counts;

  ProfileVector() = default;
  ProfileVector(int ground, std::vector<BigInt> c) : n(ground), counts(std::move(c)) {
    if (ground < 0 || counts.size() != static_cast<std::size_t>(ground) + 1) {
      throw domain_error("profile vector must have length n + 1");
    }
    for (const auto& x : counts) {
      if (x < 0) throw domain_error("profile vector entries must be nonnegative");
    }
  }

  BigInt size() const {
    BigInt s = 0;
    for (const auto& x : counts) s += x;
    return s;
  }

  BigInt volume() const {
    BigInt v = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) v += counts[i] * static_cast<unsigned>(i);
    return v;
  }

  friend bool operator==(const ProfileVector&, const ProfileVector&) = default;
};

/// Per-level weights (w_0, ..., w_n).
struct WeightSequence {
  int n = 0;
  std::vector<Rational> w;

  WeightSequence() = default;
  WeightSequence(int ground, std::vector<Rational> weights) : n(ground), w(std::move(weights)) {
    if (ground < 0 || w.size() != static_cast<std::size_t>(ground) + 1) {
      throw domain_error("weight sequence must have length n + 1");
    }
    for (const auto& x : w) {
      if (x < 0) throw domain_error("weights must be nonnegative");
    }
  }

  /// w_i - w_{i-1} nondecreasing in i.
  bool is_convex() const {
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      if (w[i + 1] - w[i] < w[i] - w[i - 1]) return false;
    }
    return true;
  }

  /// w_i - w_{i-1} nonincreasing in i.
  bool is_concave() const {
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      if (w[i + 1] - w[i] > w[i] - w[i - 1]) return false;
    }
    return true;
  }
};

/// w_i = 1 / C(n, i); the weight of a family is then its BLYM value.
inline WeightSequence blym_weights(int n) {
  std::vector<Rational> w;
  for (int i = 0; i <= n; ++i) w.emplace_back(make_rational(1, binom(n, i)));
  return {n, std::move(w)};
}

/// w_i = i; the weight of a family is then its volume.
inline WeightSequence volume_weights(int n) {
  std::vector<Rational> w;
  for (int i = 0; i <= n; ++i) w.emplace_back(i);
  return {n, std::move(w)};
}

inline ProfileVector profile(const Family& fam) {
  std::vector<BigInt> c;
  for (auto x : fam.level_counts()) c.emplace_back(x);
  return {fam.ground(), std::move(c)};
}

inline bool is_antichain(const Family& fam) {
  const auto& ms = fam.members();
  // Members are sorted by size, so only later members can be supersets.
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[j].size() > ms[i].size() && ms[i].is_subset_of(ms[j])) return false;
    }
  }
  return true;
}

/// Values k in [1, n] with every member size in {k - 1, k}.
inline std::vector<int> flat_levels(const Family& fam) {
  const auto lv = fam.levels();
  std::vector<int> ks;
  for (int k = 1; k <= fam.ground(); ++k) {
    bool ok = true;
    for (int l : lv) ok = ok && (l == k || l == k - 1);
    if (ok) ks.push_back(k);
  }
  return ks;
}

struct FlatResult {
  bool flat = false;
  /// Witnessing k when exactly one k works.
  std::optional<int> k;
};

inline FlatResult is_flat(const Family& fam) {
  if (fam.empty()) return {true, std::nullopt};
  const auto ks = flat_levels(fam);
  FlatResult r{!ks.empty(), std::nullopt};
  if (ks.size() == 1) r.k = ks.front();
  return r;
}

namespace detail {

inline void require_flat_at(const Family& fam, int k) {
  if (k < 1 || k > fam.ground()) throw domain_error("flat level k must lie in [1, n]");
  for (int l : fam.levels()) {
    if (l != k && l != k - 1) throw domain_error("family is not flat at levels {k-1, k}");
  }
}

}  // namespace detail

/// Full flat antichain at levels {k-1, k}: the (k-1)-part is exactly the
/// (k-1)-level minus the shadow of the k-part.
inline bool is_ffa(const Family& fam, int k) {
  detail::require_flat_at(fam, k);
  const Family upper = fam.level(k);
  const Family lower = fam.level(k - 1);
  const Family sh = shadow(upper);
  for (const auto& b : lower) {
    if (sh.contains(b)) return false;
  }
  return BigInt(lower.size() + sh.size()) == binom(fam.ground(), k - 1);
}

/// FFA for some admissible k.
inline bool is_ffa(const Family& fam) {
  if (!is_flat(fam).flat) throw domain_error("is_ffa: family is not flat");
  for (int k : flat_levels(fam)) {
    if (is_ffa(fam, k)) return true;
  }
  return false;
}

/// Maximal flat antichain at {k-1, k}: every k-set outside the family
/// contains a member of the (k-1)-part. Checked by scanning the whole level.
inline bool is_mfa(const Family& fam, int k) {
  if (!is_ffa(fam, k)) throw domain_error("is_mfa: family is not an FFA at this k");
  const Family lower = fam.level(k - 1);
  std::optional<KSet> t = KSet::initial(k, fam.ground());
  for (; t; t = colex_successor(*t)) {
    if (fam.contains(*t)) continue;
    bool covered = false;
    for (std::size_t j = 0; j < static_cast<std::size_t>(k) && !covered; ++j) {
      covered = lower.contains(t->without_index(j));
    }
    if (!covered) return false;
  }
  return true;
}

inline bool is_mfa(const Family& fam) {
  if (!is_flat(fam).flat) throw domain_error("is_mfa: family is not flat");
  bool any_ffa = false;
  for (int k : flat_levels(fam)) {
    if (!is_ffa(fam, k)) continue;
    any_ffa = true;
    if (is_mfa(fam, k)) return true;
  }
  if (!any_ffa) throw domain_error("is_mfa: family is not an FFA");
  return false;
}

inline Rational weight_of_profile(const ProfileVector& p, const WeightSequence& ws) {
  if (p.n != ws.n) throw domain_error("weight_of_profile: ground sizes differ");
  Rational total = 0;
  for (std::size_t i = 0; i < p.counts.size(); ++i) total += Rational(p.counts[i]) * ws.w[i];
  return total;
}

inline Rational weight(const Family& fam, const WeightSequence& ws) {
  return weight_of_profile(profile(fam), ws);
}

/// Sum over members of 1 / C(n, |F|).
inline Rational blym(const Family& fam) {
  Rational total = 0;
  for (int i = 0; i <= fam.ground(); ++i) {
    if (auto c = fam.count_at(i)) total += make_rational(c, binom(fam.ground(), i));
  }
  return total;
}

/// Repeatedly moves one set from the lowest occupied level l up to l + 1 and
/// one from the highest occupied level u down to u - 1 until u - l <= 1.
/// Returns every vector visited, starting with p itself.
inline std::vector<ProfileVector> flatten_profile(const ProfileVector& p) {
  std::vector<ProfileVector> traj{p};
  ProfileVector cur = p;
  for (;;) {
    int lo = -1;
    int hi = -1;
    for (int i = 0; i <= cur.n; ++i) {
      if (cur.counts[static_cast<std::size_t>(i)] != 0) {
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    if (lo < 0 || hi - lo <= 1) break;
    auto at = [&](int i) -> BigInt& { return cur.counts[static_cast<std::size_t>(i)]; };
    at(lo) -= 1;
    at(lo + 1) += 1;
    at(hi) -= 1;
    at(hi - 1) += 1;
    traj.push_back(cur);
  }
  return traj;
}

}  // namespace flatchain
