#pragma once

// Subsets of [n], the squashed (colexicographic) order on k-subsets, and the
// shadow / shade of uniform families.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatchain/errors.hpp"
#include "flatchain/numeric.hpp"

namespace flatchain {

/// A subset of [n] = {1, ..., n}, held as its strictly increasing elements.
class KSet {
 public:
  KSet() = default;

  explicit KSet(int ground) : ground_(ground) {
    if (ground < 0) throw domain_error("KSet: negative ground size");
  }

  KSet(int ground, std::vector<int> elements) : ground_(ground), elems_(std::move(elements)) {
    if (ground < 0) throw domain_error("KSet: negative ground size");
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (elems_[j] < 1 || elems_[j] > ground_) {
        throw domain_error("KSet: element " + std::to_string(elems_[j]) + " outside [1, " +
                           std::to_string(ground_) + "]");
      }
      if (j > 0 && elems_[j - 1] >= elems_[j]) {
        throw domain_error("KSet: elements must be strictly increasing");
      }
    }
  }

  static KSet from_unsorted(int ground, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
      throw domain_error("KSet: duplicate element");
    }
    return KSet(ground, std::move(elements));
  }

  /// {1, ..., k}: the first k-set in squashed order.
  static KSet initial(int k, int ground) {
    if (k < 0 || k > ground) throw range_error("KSet::initial: k outside [0, n]");
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = j + 1;
    return KSet(ground, std::move(e));
  }

  /// {n-k+1, ..., n}: the last k-set in squashed order.
  static KSet terminal(int k, int ground) {
    if (k < 0 || k > ground) throw range_error("KSet::terminal: k outside [0, n]");
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = ground - k + 1 + j;
    return KSet(ground, std::move(e));
  }

  int ground() const noexcept { return ground_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool empty() const noexcept { return elems_.empty(); }
  std::span<const int> elements() const noexcept { return elems_; }
  int operator[](std::size_t j) const { return elems_[j]; }

  bool contains(int e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

  bool is_subset_of(const KSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  /// The set with its j-th smallest element (0-based) removed.
  KSet without_index(std::size_t j) const {
    KSet r(ground_);
    r.elems_.reserve(elems_.size() - 1);
    for (std::size_t q = 0; q < elems_.size(); ++q) {
      if (q != j) r.elems_.push_back(elems_[q]);
    }
    return r;
  }

  KSet with(int e) const {
    if (contains(e)) return *this;
    std::vector<int> v = elems_;
    v.insert(std::upper_bound(v.begin(), v.end(), e), e);
    return KSet(ground_, std::move(v));
  }

  /// [n] \ this.
  KSet complement() const {
    KSet r(ground_);
    r.elems_.reserve(static_cast<std::size_t>(ground_) - elems_.size());
    std::size_t q = 0;
    for (int e = 1; e <= ground_; ++e) {
      if (q < elems_.size() && elems_[q] == e) {
        ++q;
      } else {
        r.elems_.push_back(e);
      }
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(elems_[j]);
    }
    return s + "}";
  }

  friend bool operator==(const KSet&, const KSet&) = default;

 private:
  int ground_ = 0;
  std::vector<int> elems_;
};

namespace detail {

// Colex comparison of two equal-size sets: the first difference scanning from
// the top decides, and the set holding the larger element comes later.
inline std::strong_ordering colex_unchecked(const KSet& f, const KSet& g) {
  for (std::size_t j = static_cast<std::size_t>(f.size()); j-- > 0;) {
    if (f[j] != g[j]) return f[j] < g[j] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Squashed order: f precedes g iff max of the symmetric difference lies in g.
inline std::strong_ordering colex_compare(const KSet& f, const KSet& g) {
  if (f.size() != g.size()) throw invalid_comparison("colex_compare: cardinalities differ");
  if (f.ground() != g.ground()) throw invalid_comparison("colex_compare: ground sizes differ");
  return detail::colex_unchecked(f, g);
}

/// Canonical member order for families: by cardinality, then squashed order.
struct LevelColexLess {
  bool operator()(const KSet& f, const KSet& g) const {
    if (f.size() != g.size()) return f.size() < g.size();
    return detail::colex_unchecked(f, g) < 0;
  }
};

/// 0-based position of f among the |f|-subsets in squashed order:
/// sum over j of C(x_j - 1, j).
inline BigInt colex_rank(const KSet& f) {
  BigInt r = 0;
  for (int j = 1; j <= f.size(); ++j) r += binom(f[static_cast<std::size_t>(j - 1)] - 1, j);
  return r;
}

/// Inverse of colex_rank over the k-subsets of [n].
inline KSet colex_unrank(const BigInt& r, int k, int n) {
  if (k < 0 || n < 0 || k > n) throw range_error("colex_unrank: need 0 <= k <= n");
  if (r < 0 || r >= binom(n, k)) throw range_error("colex_unrank: rank out of range");
  std::vector<int> e(static_cast<std::size_t>(k));
  BigInt rest = r;
  int hi = n;  // x_j <= hi
  for (int j = k; j >= 1; --j) {
    // Largest x in [j, hi] with C(x - 1, j) <= rest.
    int x = hi;
    BigInt c = binom(x - 1, j);
    while (c > rest) {
      --x;
      c = binom(x - 1, j);
    }
    e[static_cast<std::size_t>(j - 1)] = x;
    rest -= c;
    hi = x - 1;
  }
  return KSet(n, std::move(e));
}

/// Next set of the same size in squashed order, or nullopt at the last one.
inline std::optional<KSet> colex_successor(const KSet& f) {
  const int k = f.size();
  const int n = f.ground();
  std::vector<int> e(f.elements().begin(), f.elements().end());
  for (int j = 0; j < k; ++j) {
    const int limit = (j + 1 < k) ? e[static_cast<std::size_t>(j + 1)] : n + 1;
    if (e[static_cast<std::size_t>(j)] + 1 < limit) {
      ++e[static_cast<std::size_t>(j)];
      for (int q = 0; q < j; ++q) e[static_cast<std::size_t>(q)] = q + 1;
      return KSet(n, std::move(e));
    }
  }
  return std::nullopt;
}

/// The first m k-subsets of [n] in squashed order.
inline std::vector<KSet> initial_segment(int n, int k, std::uint64_t m) {
  if (k < 0 || k > n) throw range_error("initial_segment: need 0 <= k <= n");
  if (BigInt(m) > binom(n, k)) throw range_error("initial_segment: m exceeds C(n, k)");
  std::vector<KSet> out;
  out.reserve(m);
  if (m == 0) return out;
  std::optional<KSet> cur = KSet::initial(k, n);
  while (cur && out.size() < m) {
    out.push_back(*cur);
    cur = colex_successor(*cur);
  }
  return out;
}

/// Every k-subset of [n], in squashed order.
inline std::vector<KSet> full_level(int n, int k) {
  return initial_segment(n, k, static_cast<std::uint64_t>(binom(n, k)));
}

/// A finite set of subsets of a common ground [n], stored canonically
/// (sorted by level, then squashed order, no duplicates).
class Family {
 public:
  explicit Family(int ground = 0) : ground_(ground), counts_(static_cast<std::size_t>(ground) + 1, 0) {}

  Family(int ground, std::vector<KSet> members) : Family(ground) {
    for (const auto& s : members) {
      if (s.ground() != ground) throw domain_error("Family: member ground differs from family ground");
    }
    std::sort(members.begin(), members.end(), LevelColexLess{});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    for (const auto& s : members_) ++counts_[static_cast<std::size_t>(s.size())];
  }

  int ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<KSet>& members() const noexcept { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Number of members of cardinality i, for 0 <= i <= n.
  std::size_t count_at(int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::size_t>& level_counts() const noexcept { return counts_; }

  /// Cardinalities that occur, ascending.
  std::vector<int> levels() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i]) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  /// The common cardinality; nullopt for the empty family; level_error if mixed.
  std::optional<int> uniform_level() const {
    auto lv = levels();
    if (lv.empty()) return std::nullopt;
    if (lv.size() > 1) throw level_error("family has members on several levels");
    return lv.front();
  }

  bool contains(const KSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, LevelColexLess{});
  }

  bool is_subfamily_of(const Family& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end(), LevelColexLess{});
  }

  /// Members of cardinality i.
  Family level(int i) const {
    std::vector<KSet> v;
    for (const auto& s : members_) {
      if (s.size() == i) v.push_back(s);
    }
    return Family(ground_, std::move(v));
  }

  friend bool operator==(const Family& a, const Family& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  int ground_;
  std::vector<KSet> members_;
  std::vector<std::size_t> counts_;
};

/// All (i-1)-sets contained in some member of an i-uniform family.
inline Family shadow(const Family& fam) {
  auto lvl = fam.uniform_level();
  if (!lvl || *lvl == 0) return Family(fam.ground());
  std::vector<KSet> out;
  out.reserve(fam.size() * static_cast<std::size_t>(*lvl));
  for (const auto& s : fam) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(s.size()); ++j) out.push_back(s.without_index(j));
  }
  return Family(fam.ground(), std::move(out));
}

/// All (i+1)-subsets of [n] containing some member of an i-uniform family.
inline Family shade(const Family& fam) {
  auto lvl = fam.uniform_level();
  if (!lvl || *lvl >= fam.ground()) return Family(fam.ground());
  std::vector<KSet> out;
  out.reserve(fam.size() * static_cast<std::size_t>(fam.ground() - *lvl));
  for (const auto& s : fam) {
    for (int e = 1; e <= fam.ground(); ++e) {
      if (!s.contains(e)) out.push_back(s.with(e));
    }
  }
  return Family(fam.ground(), std::move(out));
}

/// {[n] \ F : F in fam}.
inline Family complement_family(const Family& fam) {
  std::vector<KSet> out;
  out.reserve(fam.size());
  for (const auto& s : fam) out.push_back(s.complement());
  return Family(fam.ground(), std::move(out));
}

}  // namespace flatchain
