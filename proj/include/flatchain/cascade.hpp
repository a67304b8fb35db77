#pragma once

// k-cascade representations m = C(a_k, k) + ... + C(a_1, 1) and the shadow
// sizes of initial segments in squashed order.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatchain/errors.hpp"
#include "flatchain/numeric.hpp"
#include "flatchain/subsets.hpp"

namespace flatchain {

/// A k-cascade (a_1, ..., a_k) with a_k > ... > a_t >= t and a_i = 0 below t.
/// Zero entries are kept down to index 1.
class Cascade {
 public:
  /// `entries` lists a_1 first and a_k last.
  Cascade(int k, std::vector<int> entries) : k_(k), a_(std::move(entries)) {
    if (k < 1) throw malformed_cascade("cascade: k must be >= 1");
    if (a_.size() != static_cast<std::size_t>(k)) throw malformed_cascade("cascade: expected k entries");
    for (int i = 1; i <= k; ++i) {
      const int ai = a(i);
      if (ai < 0) throw malformed_cascade("cascade: negative entry");
      if (ai == 0) {
        if (t_) throw malformed_cascade("cascade: zero entry above a positive one");
        continue;
      }
      if (!t_) {
        if (ai < i) throw malformed_cascade("cascade: a_t < t");
        t_ = i;
      } else if (ai <= a(i - 1)) {
        throw malformed_cascade("cascade: entries must strictly increase above t");
      }
    }
  }

  static Cascade zero(int k) { return Cascade(k, std::vector<int>(static_cast<std::size_t>(k), 0)); }

  int k() const noexcept { return k_; }
  /// a_i for 1 <= i <= k.
  int a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
  /// Least index with a positive entry; nullopt for the all-zero cascade.
  std::optional<int> t() const noexcept { return t_; }
  bool is_zero() const noexcept { return !t_; }
  std::span<const int> entries() const noexcept { return a_; }

  /// (a_k, ..., a_1), the order used in reports.
  std::vector<int> descending() const { return {a_.rbegin(), a_.rend()}; }

  std::string to_string() const {
    std::string s = "(";
    for (int i = k_; i >= 1; --i) {
      s += std::to_string(a(i));
      if (i > 1) s += ',';
    }
    return s + ")";
  }

  friend bool operator==(const Cascade&, const Cascade&) = default;

 private:
  int k_;
  std::vector<int> a_;
  std::optional<int> t_;
};

/// The unique k-cascade of m, built greedily from the top index.
inline Cascade cascade_of(const BigInt& m, int k) {
  if (k < 1) throw range_error("cascade_of: k must be >= 1");
  if (m < 0) throw range_error("cascade_of: m must be nonnegative");
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  BigInt rest = m;
  for (int i = k; i >= 1 && rest > 0; --i) {
    // Largest x with C(x, i) <= rest; C(i, i) = 1 <= rest so x >= i.
    int x = i;
    BigInt c = 1;
    for (;;) {
      BigInt next = c * (x + 1) / (x + 1 - i);  // C(x + 1, i)
      if (next > rest) break;
      c = std::move(next);
      ++x;
    }
    a[static_cast<std::size_t>(i - 1)] = x;
    rest -= c;
  }
  return Cascade(k, std::move(a));
}

inline BigInt cascade_value(const Cascade& c) {
  BigInt m = 0;
  for (int i = 1; i <= c.k(); ++i) {
    if (c.a(i) > 0) m += binom(c.a(i), i);
  }
  return m;
}

/// Size of the shadow of the first m k-sets: sum of C(a_i, i - 1) over a_i > 0.
inline BigInt shadow_size(const Cascade& c) {
  BigInt s = 0;
  for (int i = 1; i <= c.k(); ++i) {
    if (c.a(i) > 0) s += binom(c.a(i), i - 1);
  }
  return s;
}

/// The m-th k-set in squashed order (m = cascade value), or nullopt for m = 0.
inline std::optional<KSet> last_member(const Cascade& c, int n) {
  if (cascade_value(c) > binom(n, c.k())) throw range_error("last_member: cascade value exceeds C(n, k)");
  if (c.is_zero()) return std::nullopt;
  const int t = *c.t();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(c.k()));
  for (int x = c.a(t) - t + 1; x <= c.a(t); ++x) e.push_back(x);
  for (int i = t + 1; i <= c.k(); ++i) e.push_back(c.a(i) + 1);
  return KSet(n, std::move(e));
}

}  // namespace flatchain
