#pragma once

// Full squashed flat antichains: A is the first m k-sets in squashed order and
// B is every (k-1)-set outside the shadow of A. The triple (n, k, m)
// determines the family; member lists are only built on request.

#include <cstdint>
#include <optional>
#include <vector>

#include "flatchain/antichain.hpp"
#include "flatchain/cascade.hpp"
#include "flatchain/errors.hpp"
#include "flatchain/numeric.hpp"
#include "flatchain/subsets.hpp"

namespace flatchain {

struct Fsfa {
  int n = 0;
  int k = 0;
  BigInt m;
  Cascade cascade = Cascade::zero(1);
  BigInt size_a;
  BigInt size_b;

  BigInt size() const { return size_a + size_b; }
  BigInt volume() const { return size_a * k + size_b * (k - 1); }
  Rational blym() const {
    return make_rational(size_a, binom(n, k)) + make_rational(size_b, binom(n, k - 1));
  }

  /// The k-sets of the family, in squashed order.
  Family members_a(std::uint64_t cap = kDefaultCap) const {
    if (size_a > cap) throw capacity_error("FSFA k-part exceeds the materialization cap");
    return Family(n, initial_segment(n, k, static_cast<std::uint64_t>(size_a)));
  }

  /// The (k-1)-sets of the family.
  Family members_b(std::uint64_t cap = kDefaultCap) const {
    if (binom(n, k - 1) > cap) throw capacity_error("(k-1)-level exceeds the materialization cap");
    const Family sh = shadow(members_a(cap));
    std::vector<KSet> out;
    for (std::optional<KSet> s = KSet::initial(k - 1, n); s; s = colex_successor(*s)) {
      if (!sh.contains(*s)) out.push_back(*s);
    }
    return Family(n, std::move(out));
  }

  Family members(std::uint64_t cap = kDefaultCap) const {
    const Family a = members_a(cap);
    const Family b = members_b(cap);
    std::vector<KSet> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return Family(n, std::move(all));
  }
};

inline Fsfa make_fsfa(int n, int k, const BigInt& m) {
  if (n < 1 || k < 1 || k > n) throw range_error("make_fsfa: need 1 <= k <= n");
  if (m < 0 || m > binom(n, k)) throw range_error("make_fsfa: need 0 <= m <= C(n, k)");
  Fsfa f;
  f.n = n;
  f.k = k;
  f.m = m;
  f.cascade = cascade_of(m, k);
  f.size_a = m;
  f.size_b = binom(n, k - 1) - shadow_size(f.cascade);
  return f;
}

/// Maximality via the cascade: an FSFA with k >= 2 is maximal iff a_1 = 0.
inline bool is_msfa_cascade(const Fsfa& f) {
  if (f.k < 2) throw unsupported_parameter("is_msfa_cascade: requires k >= 2");
  return f.cascade.a(1) == 0;
}

/// Maximality via the last k-set {x_1 < x_2 < ...}: maximal iff x_2 = x_1 + 1,
/// or A is the whole level.
inline bool is_msfa_lastset(const Fsfa& f) {
  if (f.k < 2) throw unsupported_parameter("is_msfa_lastset: requires k >= 2");
  if (f.m == 0) throw empty_segment("is_msfa_lastset: A is empty; use is_msfa_cascade");
  if (f.m == binom(f.n, f.k)) return true;
  const KSet last = *last_member(f.cascade, f.n);
  return last[1] == last[0] + 1;
}

/// Maximality for any k. For k = 1, B is {{}} when m = 0 and empty otherwise,
/// so the family is maximal iff m = 0 or m = n.
inline bool is_msfa(const Fsfa& f) {
  if (f.k == 1) return f.m == 0 || f.m == f.n;
  return is_msfa_cascade(f);
}

/// The unique MSFA A' u B containing the FSFA: A' is the longest initial
/// segment with the same shadow as A.
inline Fsfa msfa_closure(const Fsfa& f) {
  if (f.k < 2) throw unsupported_parameter("msfa_closure: requires k >= 2");
  const BigInt top = binom(f.n, f.k);
  const BigInt target = shadow_size(f.cascade);
  auto same_shadow = [&](const BigInt& x) { return shadow_size(cascade_of(x, f.k)) == target; };

  // same_shadow holds on [m, m'] and fails beyond, since shadow sizes of
  // initial segments are nondecreasing.
  BigInt lo = f.m;
  BigInt step = 1;
  for (;;) {
    BigInt cand = lo + step;
    if (cand > top || !same_shadow(cand)) break;
    lo = cand;
    step *= 2;
  }
  BigInt hi = lo + step;
  if (hi > top + 1) hi = top + 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (same_shadow(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make_fsfa(f.n, f.k, lo);
}

/// Some FSFA with |A| + |B| = s, for 1 <= s <= C(n, floor(n/2)). Returns the
/// smallest k admitting such an FSFA and, for that k, the smallest m. The scan
/// evaluates at most `cap` values of m before raising capacity_error.
inline Fsfa fsfa_of_size(int n, const BigInt& s, std::uint64_t cap = kDefaultCap) {
  if (n < 1) throw range_error("fsfa_of_size: n must be >= 1");
  if (s < 1 || s > binom(n, n / 2)) throw range_error("fsfa_of_size: need 1 <= s <= C(n, floor(n/2))");
  std::uint64_t evaluated = 0;
  for (int k = 1; k <= n; ++k) {
    const BigInt top = binom(n, k);
    const BigInt below = binom(n, k - 1);
    // Two-level antichains at {k-1, k} have at most max(C(n,k), C(n,k-1)) sets.
    if (s > (top > below ? top : below)) continue;
    for (BigInt m = 0; m <= top; ++m) {
      if (++evaluated > cap) throw capacity_error("fsfa_of_size: scan exceeds the cap");
      if (m + below - shadow_size(cascade_of(m, k)) == s) return make_fsfa(n, k, m);
    }
  }
  throw range_error("fsfa_of_size: no FSFA of this size");
}

}  // namespace flatchain
