#pragma once

// Closed-form minimizers of alpha*|A| + beta*|B| over all FSFA and all MSFA
// on levels {k-1, k} of B_n, with every tie enumerated, and the quantities
// derived from them (minimum size, volume and BLYM value).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "flatchain/cascade.hpp"
#include "flatchain/errors.hpp"
#include "flatchain/numeric.hpp"

namespace flatchain {

/// Positive weights alpha (per k-set) and beta (per (k-1)-set).
class WeightSpec {
 public:
  WeightSpec(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ <= 0 || beta_ <= 0) throw domain_error("weights alpha and beta must be positive");
  }

  /// alpha = 1, beta = lambda.
  static WeightSpec from_lambda(const Rational& lambda) { return {Rational(1), lambda}; }

  /// alpha = beta = 1: the weight is the size of the family.
  static WeightSpec size() { return {Rational(1), Rational(1)}; }

  /// alpha = k, beta = k - 1: the weight is the volume.
  static WeightSpec volume(int k) { return {Rational(k), Rational(k - 1)}; }

  /// alpha = 1/C(n,k), beta = 1/C(n,k-1): the weight is the BLYM value.
  static WeightSpec blym(int n, int k) {
    return {make_rational(1, binom(n, k)), make_rational(1, binom(n, k - 1))};
  }

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  Rational lambda() const { return beta_ / alpha_; }

 private:
  Rational alpha_;
  Rational beta_;
};

enum class Mode { fsfa, msfa };

inline const char* to_string(Mode m) { return m == Mode::fsfa ? "fsfa" : "msfa"; }

struct Optimum {
  Cascade cascade;
  BigInt m;
  BigInt size_b;
};

struct OptimumReport {
  int n = 0;
  int k = 0;
  WeightSpec spec = WeightSpec::size();
  Mode mode = Mode::fsfa;
  /// Sorted by m ascending.
  std::vector<Optimum> optima;
  Rational min_weight;
  /// Index into optima of the one taking the larger value at every tie.
  std::size_t canonical = 0;

  std::vector<BigInt> m_values() const {
    std::vector<BigInt> v;
    for (const auto& o : optima) v.push_back(o.m);
    return v;
  }
};

/// h_i(x) = C(x, i) - lambda * C(x, i - 1).
inline Rational h_value(int i, int x, const Rational& lambda) {
  if (i < 1 || x < 0) throw domain_error("h_value: need i >= 1 and x >= 0");
  return Rational(binom(x, i)) - lambda * Rational(binom(x, i - 1));
}

/// g(m) = m - lambda * |shadow of the first m k-sets|.
inline Rational g_value(const BigInt& m, int k, const Rational& lambda) {
  return Rational(m) - lambda * Rational(shadow_size(cascade_of(m, k)));
}

namespace detail {

// Summand of the minimum-weight formula for one cascade index. A zero entry
// contributes nothing, which is the C(0,0) = 0 reading the formula needs at
// i = 1; the ordinary binomial is left alone.
inline Rational weight_term(int i, int ai, const WeightSpec& spec) {
  if (ai == 0) return 0;
  return spec.alpha() * Rational(binom(ai, i)) - spec.beta() * Rational(binom(ai, i - 1));
}

inline void require_interior(int n, int k) {
  if (!(1 < k && k < n)) throw unsupported_parameter("optimizer requires 1 < k < n");
}

// Admissible values of a_i for a minimum-weight FSFA (fsfa table) or for the
// lambda <= n-k+1 branch of the MSFA table. Ascending, distinct.
inline std::vector<int> index_options(int n, int k, int i, const Rational& lambda, Mode mode) {
  const Rational ri(i);
  // i > 1 + (n-k)/lambda
  if ((ri - 1) * lambda > n - k) return {n - k - 1 + i};
  // 1 + (n-k)/lambda >= i >= 1 + 2/lambda
  if ((ri - 1) * lambda >= 2) {
    const Rational u = Rational(i - 1) * (lambda + 1);
    const int lo = static_cast<int>(ceil_of(u - 1));
    const int hi = static_cast<int>(floor_of(u));
    if (lo == hi) return {lo};
    return {lo, hi};
  }
  if (mode == Mode::msfa && i == 1) return {0};
  // 1 + 2/lambda > i > 1/lambda
  if (ri * lambda > 1) return {i};
  // 1/lambda = i
  if (ri * lambda == 1) return {0, i};
  return {0};
}

inline Optimum make_optimum(int n, Cascade c) {
  Optimum o{c, cascade_value(c), binom(n, c.k() - 1) - shadow_size(c)};
  return o;
}

}  // namespace detail

/// Minimum weight from a cascade: beta*C(n,k-1) + sum over i with a_i > 0 of
/// alpha*C(a_i,i) - beta*C(a_i,i-1). Equals alpha*|A| + beta*|B|.
inline Rational min_weight(int n, int k, const WeightSpec& spec, const Cascade& c) {
  if (c.k() != k) throw domain_error("min_weight: cascade has the wrong k");
  Rational w = spec.beta() * Rational(binom(n, k - 1));
  for (int i = 1; i <= k; ++i) w += detail::weight_term(i, c.a(i), spec);
  return w;
}

namespace detail {

inline OptimumReport enumerate_table(int n, int k, const WeightSpec& spec, Mode mode) {
  const Rational lambda = spec.lambda();
  std::vector<std::vector<int>> options(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) options[static_cast<std::size_t>(i)] = index_options(n, k, i, lambda, mode);

  OptimumReport rep;
  rep.n = n;
  rep.k = k;
  rep.spec = spec;
  rep.mode = mode;

  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::vector<int> canon(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= k; ++i) canon[static_cast<std::size_t>(i - 1)] = options[static_cast<std::size_t>(i)].back();

  std::function<void(int)> expand = [&](int i) {
    if (i > k) {
      Cascade c(k, a);  // throws malformed_cascade if the table were inconsistent
      rep.optima.push_back(make_optimum(n, c));
      return;
    }
    for (int v : options[static_cast<std::size_t>(i)]) {
      a[static_cast<std::size_t>(i - 1)] = v;
      expand(i + 1);
    }
  };
  expand(1);

  const Cascade canonical(k, canon);
  std::sort(rep.optima.begin(), rep.optima.end(), [](const Optimum& x, const Optimum& y) { return x.m < y.m; });
  for (std::size_t j = 0; j < rep.optima.size(); ++j) {
    if (rep.optima[j].cascade == canonical) rep.canonical = j;
  }
  rep.min_weight = min_weight(n, k, spec, rep.optima.front().cascade);
  for (const auto& o : rep.optima) {
    if (min_weight(n, k, spec, o.cascade) != rep.min_weight) {
      throw error("internal: tied optima have different weights");
    }
  }
  return rep;
}

}  // namespace detail

/// Every FSFA on levels {k-1, k} of minimum weight, 1 < k < n.
inline OptimumReport optimal_fsfa(int n, int k, const WeightSpec& spec) {
  detail::require_interior(n, k);
  return detail::enumerate_table(n, k, spec, Mode::fsfa);
}

/// Every MSFA on levels {k-1, k} of minimum weight, 1 < k < n. Below
/// lambda = n-k+1 the optima come from the table with a_1 = 0; above it the
/// full k-level is the unique optimum; at equality both occur.
inline OptimumReport optimal_msfa(int n, int k, const WeightSpec& spec) {
  detail::require_interior(n, k);
  const Rational lambda = spec.lambda();
  const Rational pivot(n - k + 1);
  const Cascade full = cascade_of(binom(n, k), k);

  if (lambda > pivot) {
    OptimumReport rep;
    rep.n = n;
    rep.k = k;
    rep.spec = spec;
    rep.mode = Mode::msfa;
    rep.optima.push_back(detail::make_optimum(n, full));
    rep.min_weight = min_weight(n, k, spec, full);
    return rep;
  }
  OptimumReport rep = detail::enumerate_table(n, k, spec, Mode::msfa);
  if (lambda == pivot) {
    if (min_weight(n, k, spec, full) != rep.min_weight) {
      throw error("internal: full level does not tie at lambda = n-k+1");
    }
    rep.optima.push_back(detail::make_optimum(n, full));
    // The full level has the largest a_k, so it is the canonical choice here.
    rep.canonical = rep.optima.size() - 1;
  }
  return rep;
}

/// Catalan number C(2i, i) / (i + 1).
inline BigInt catalan(int i) { return binom(2 * i, i) / (i + 1); }

/// Minimum size s(n, k) of an FSFA on levels {k-1, k}:
/// C(n, k-1) - (Catalan_1 + ... + Catalan_{k-1}) for k <= (n+1)/2, and
/// s(n, n-k+1) otherwise.
inline BigInt s_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw range_error("s_nk: need 1 <= k <= n");
  if (2 * k > n + 1) k = n - k + 1;
  BigInt s = binom(n, k - 1);
  for (int i = 1; i <= k - 1; ++i) s -= catalan(i);
  return s;
}

inline OptimumReport optimize(int n, int k, const WeightSpec& spec, Mode mode) {
  return mode == Mode::fsfa ? optimal_fsfa(n, k, spec) : optimal_msfa(n, k, spec);
}

/// Minimum BLYM value over FSFA or MSFA on levels {k-1, k}.
inline Rational blym_min(int n, int k, Mode mode) {
  return optimize(n, k, WeightSpec::blym(n, k), mode).min_weight;
}

/// Minimum-volume FSFA (these are all MSFA, since lambda = (k-1)/k < 1).
inline OptimumReport volume_min(int n, int k) { return optimal_fsfa(n, k, WeightSpec::volume(k)); }

/// 1 - (k-1)^(k-1) / k^k, reading 0^0 as 1 at k = 1.
inline Rational blym_limit(int k) {
  if (k < 1) throw range_error("blym_limit: k must be >= 1");
  const BigInt num = boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(k - 1));
  const BigInt den = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(k));
  return Rational(1) - make_rational(num, den);
}

}  // namespace flatchain
