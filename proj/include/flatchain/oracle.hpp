#pragma once

// Brute-force ground truth. Everything here works on bitmask enumerations of
// the Boolean lattice and never calls the rank, cascade or closed-form code it
// is used to check, except where a check compares against them explicitly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flatchain/antichain.hpp"
#include "flatchain/cascade.hpp"
#include "flatchain/errors.hpp"
#include "flatchain/extremal.hpp"
#include "flatchain/fsfa.hpp"
#include "flatchain/numeric.hpp"
#include "flatchain/subsets.hpp"

namespace flatchain::oracle {

/// Largest n for which the level tables index subsets by bitmask.
inline constexpr int kMaxTableN = 24;
/// Largest n for full antichain enumeration.
inline constexpr int kMaxAntichainN = 6;

inline std::string mask_to_string(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int e = 0; e < 64; ++e) {
    if (mask >> e & 1U) {
      if (!first) s += ',';
      s += std::to_string(e + 1);
      first = false;
    }
  }
  return s + "}";
}

/// Per-m data for the initial segments of one level, computed by direct
/// enumeration: k-subsets as bitmasks in increasing numeric order (which is
/// squashed order), shadows tracked element by element.
struct LevelTable {
  int n = 0;
  int k = 0;
  /// The k-sets in squashed order.
  std::vector<std::uint64_t> sets;
  /// shadow[m] = |shadow of the first m sets|, m = 0..C(n,k).
  std::vector<std::uint64_t> shadow;
  /// maximal[m]: the FSFA (n, k, m) is a maximal flat antichain, checked
  /// against the definition (every k-set outside A contains a member of B).
  std::vector<char> maximal;

  std::uint64_t total() const { return sets.size(); }
};

inline LevelTable level_table(int n, int k, std::uint64_t cap = kDefaultCap) {
  if (n < 1 || n > kMaxTableN || k < 1 || k > n) throw capacity_error("level_table: need 1 <= k <= n <= 24");
  if (binom(n, k) > cap) throw capacity_error("level_table: C(n, k) exceeds the cap");
  LevelTable t;
  t.n = n;
  t.k = k;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t v = (std::uint64_t{1} << k) - 1; v < limit;) {
    t.sets.push_back(v);
    // Gosper: next larger integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  const std::size_t total = t.sets.size();

  // enter[S] = number of leading k-sets after which the (k-1)-set S is in the
  // shadow; 0 means never seen so far.
  std::vector<std::uint32_t> enter(limit, 0);
  t.shadow.assign(total + 1, 0);
  std::uint64_t covered = 0;
  for (std::size_t j = 0; j < total; ++j) {
    const std::uint64_t s = t.sets[j];
    for (std::uint64_t bits = s; bits; bits &= bits - 1) {
      const std::uint64_t sub = s ^ (bits & (~bits + 1));
      if (!enter[sub]) {
        enter[sub] = static_cast<std::uint32_t>(j + 1);
        ++covered;
      }
    }
    t.shadow[j + 1] = covered;
  }

  // A k-set T has all of its (k-1)-subsets in the shadow of the first m sets
  // exactly when m >= full[T]. The FSFA is maximal iff no T outside A (index
  // >= m) has m >= full[T].
  std::vector<std::uint64_t> full(total);
  for (std::size_t j = 0; j < total; ++j) {
    std::uint64_t need = 0;
    const std::uint64_t s = t.sets[j];
    for (std::uint64_t bits = s; bits; bits &= bits - 1) {
      const std::uint64_t sub = s ^ (bits & (~bits + 1));
      need = std::max<std::uint64_t>(need, enter[sub]);
    }
    full[j] = need;
  }
  t.maximal.assign(total + 1, 1);
  std::uint64_t suffix_min = UINT64_MAX;
  for (std::size_t m = total + 1; m-- > 0;) {
    if (m < total) suffix_min = std::min(suffix_min, full[m]);
    t.maximal[m] = suffix_min > m ? 1 : 0;
  }
  return t;
}

struct BruteMin {
  std::vector<std::uint64_t> argmin;
  Rational min_g;
};

/// Exhaustive minimization of g(m) = m - lambda * |shadow(first m)|. In fsfa
/// mode m = C(n,k) is excluded; in msfa mode only maximal FSFA are admitted
/// (the full level among them).
inline BruteMin brute_min_g(const LevelTable& t, const Rational& lambda, bool restrict_msfa) {
  BruteMin r;
  bool have = false;
  const std::uint64_t top = t.total();
  for (std::uint64_t m = 0; m <= top; ++m) {
    if (!restrict_msfa && m == top) continue;
    if (restrict_msfa && !t.maximal[m]) continue;
    const Rational g = Rational(m) - lambda * Rational(t.shadow[m]);
    if (!have || g < r.min_g) {
      r.min_g = g;
      r.argmin.assign(1, m);
      have = true;
    } else if (g == r.min_g) {
      r.argmin.push_back(m);
    }
  }
  return r;
}

inline BruteMin brute_min_g(int n, int k, const Rational& lambda, bool restrict_msfa,
                            std::uint64_t cap = kDefaultCap) {
  return brute_min_g(level_table(n, k, cap), lambda, restrict_msfa);
}

/// Minimum of |A| + |B| over all FSFA on levels {k-1, k}, by exhaustion.
inline std::uint64_t brute_min_size(const LevelTable& t) {
  const auto below = static_cast<std::uint64_t>(binom(t.n, t.k - 1));
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t m = 0; m <= t.total(); ++m) best = std::min(best, m + below - t.shadow[m]);
  return best;
}

struct CheckReport {
  bool pass = true;
  std::uint64_t checked = 0;
  /// First counterexample, empty when pass.
  std::string counterexample;
};

/// (a) the cascade shadow formula against the enumerated shadow for every m;
/// (b) random m-subsets of the level never beat the initial segment.
/// `fixed_m` pins the subset size in (b); otherwise it is drawn per sample.
inline CheckReport brute_shadow_check(int n, int k, std::uint64_t samples = 200, std::uint64_t seed = 1,
                                      std::optional<std::uint64_t> fixed_m = std::nullopt,
                                      std::uint64_t cap = kDefaultCap) {
  const LevelTable t = level_table(n, k, cap);
  CheckReport rep;
  for (std::uint64_t m = 0; m <= t.total(); ++m) {
    ++rep.checked;
    const BigInt formula = shadow_size(cascade_of(m, k));
    if (formula != t.shadow[m]) {
      rep.pass = false;
      rep.counterexample = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                           " expected=" + std::to_string(t.shadow[m]) + " actual=" + formula.str();
      return rep;
    }
  }
  if (fixed_m && *fixed_m > t.total()) throw range_error("brute_shadow_check: fixed m exceeds C(n, k)");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> pool = t.sets;
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t m =
        fixed_m ? *fixed_m : std::uniform_int_distribution<std::uint64_t>(0, t.total())(rng);
    // Partial Fisher-Yates: the first m entries become a uniform m-subset.
    for (std::uint64_t j = 0; j < m; ++j) {
      std::uniform_int_distribution<std::uint64_t> pick(j, pool.size() - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    std::uint64_t size = 0;
    std::vector<std::uint64_t> touched;
    for (std::uint64_t j = 0; j < m; ++j) {
      for (std::uint64_t bits = pool[j]; bits; bits &= bits - 1) {
        const std::uint64_t sub = pool[j] ^ (bits & (~bits + 1));
        if (!seen[sub]) {
          seen[sub] = 1;
          touched.push_back(sub);
          ++size;
        }
      }
    }
    for (auto sub : touched) seen[sub] = 0;
    ++rep.checked;
    if (size < t.shadow[m]) {
      rep.pass = false;
      rep.counterexample = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                           " random family shadow " + std::to_string(size) + " < initial segment " +
                           std::to_string(t.shadow[m]) + " (seed " + std::to_string(seed) + ")";
      return rep;
    }
  }
  return rep;
}

/// Depth-first enumeration of every antichain of B_n, including the empty
/// family. Subsets are bitmasks in increasing numeric order; `visit` receives
/// the chosen masks, the volume, and a bitmask of the occupied levels.
template <class Visit>
void for_each_antichain(int n, Visit&& visit) {
  if (n < 0 || n > kMaxAntichainN) throw capacity_error("antichain enumeration supports n <= 6");
  const int sets = 1 << n;
  std::vector<std::uint64_t> comparable(static_cast<std::size_t>(sets), 0);
  for (int s = 0; s < sets; ++s) {
    for (int t = 0; t < sets; ++t) {
      if ((s & t) == s || (s & t) == t) comparable[static_cast<std::size_t>(s)] |= std::uint64_t{1} << t;
    }
  }
  const std::uint64_t all = sets == 64 ? UINT64_MAX : (std::uint64_t{1} << sets) - 1;
  std::vector<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(sets));
  std::function<void(std::uint64_t, int, unsigned)> rec = [&](std::uint64_t allowed, int volume, unsigned levels) {
    if (!allowed) {
      visit(static_cast<const std::vector<std::uint64_t>&>(chosen), volume, levels);
      return;
    }
    const int s = std::countr_zero(allowed);
    const std::uint64_t bit = std::uint64_t{1} << s;
    const int card = std::popcount(static_cast<unsigned>(s));
    chosen.push_back(static_cast<std::uint64_t>(s));
    rec(allowed & ~comparable[static_cast<std::size_t>(s)], volume + card, levels | (1U << card));
    chosen.pop_back();
    rec(allowed & ~bit, volume, levels);
  };
  rec(all, 0, 0U);
}

/// Occupied levels fit in {k-1, k} for some 1 <= k <= n (the empty family too).
inline bool levels_flat(unsigned levels, int n) {
  if (levels == 0) return true;
  const int lo = std::countr_zero(levels);
  const int hi = 31 - std::countl_zero(levels);
  if (hi - lo > 1) return false;
  return n >= 1;
}

struct FlatTheoremReport {
  int n = 0;
  bool pass = true;
  /// Number of antichains, counting the empty family.
  std::uint64_t antichains = 0;
  /// Distinct (size, volume) pairs realized.
  std::uint64_t classes = 0;
  std::vector<std::pair<int, int>> unmatched;
};

/// Every (size, volume) pair realized by an antichain of B_n is realized by a
/// flat antichain. Empirical evidence for n <= 6 only.
inline FlatTheoremReport check_flat_theorem(int n) {
  if (n < 1 || n > kMaxAntichainN) throw capacity_error("check_flat_theorem: need 1 <= n <= 6");
  const int max_size = 1 << n;
  const int max_vol = max_size * n;
  // bit 0: realized, bit 1: realized by a flat antichain
  std::vector<unsigned char> cls(static_cast<std::size_t>((max_size + 1) * (max_vol + 1)), 0);
  FlatTheoremReport rep;
  rep.n = n;
  for_each_antichain(n, [&](const std::vector<std::uint64_t>& members, int volume, unsigned levels) {
    ++rep.antichains;
    auto& c = cls[members.size() * static_cast<std::size_t>(max_vol + 1) + static_cast<std::size_t>(volume)];
    c |= 1U;
    if (levels_flat(levels, n)) c |= 2U;
  });
  for (int s = 0; s <= max_size; ++s) {
    for (int v = 0; v <= max_vol; ++v) {
      const auto c = cls[static_cast<std::size_t>(s * (max_vol + 1) + v)];
      if (!(c & 1U)) continue;
      ++rep.classes;
      if (!(c & 2U)) {
        rep.pass = false;
        rep.unmatched.emplace_back(s, v);
      }
    }
  }
  return rep;
}

struct ProbeReport {
  int n = 0;
  int k = 0;
  std::uint64_t m = 0;
  std::uint64_t size = 0;
  std::uint64_t volume = 0;
  /// Antichains with the same size and volume, the MSFA itself included.
  std::uint64_t equivalent = 0;
  /// Non-flat equivalent antichains found (at most kMaxWitnesses are listed).
  std::uint64_t non_flat = 0;
  std::vector<std::string> witnesses;
  static constexpr std::size_t kMaxWitnesses = 50;
};

/// Searches B_n for non-flat antichains equivalent (same size and volume) to
/// the MSFA (n, k, m). The outcome is a finding, not a proof of anything.
inline ProbeReport equivalence_probe(int n, int k, std::uint64_t m) {
  if (n > kMaxAntichainN) throw capacity_error("equivalence_probe: need n <= 6");
  const Fsfa f = make_fsfa(n, k, m);
  if (!is_mfa(f.members(), k)) throw domain_error("equivalence_probe: (n, k, m) is not an MSFA");
  ProbeReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = m;
  rep.size = static_cast<std::uint64_t>(f.size());
  rep.volume = static_cast<std::uint64_t>(f.volume());
  for_each_antichain(n, [&](const std::vector<std::uint64_t>& members, int volume, unsigned levels) {
    if (members.size() != rep.size || static_cast<std::uint64_t>(volume) != rep.volume) return;
    ++rep.equivalent;
    if (levels_flat(levels, n)) return;
    ++rep.non_flat;
    if (rep.witnesses.size() < ProbeReport::kMaxWitnesses) {
      std::string w = "{";
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j) w += ',';
        w += mask_to_string(members[j]);
      }
      rep.witnesses.push_back(w + "}");
    }
  });
  return rep;
}

/// Every MSFA (n, k, m) with 1 <= k <= n, by the definitional maximality test.
inline std::vector<std::pair<int, std::uint64_t>> all_msfa(int n) {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (int k = 1; k <= n; ++k) {
    const auto top = static_cast<std::uint64_t>(binom(n, k));
    for (std::uint64_t m = 0; m <= top; ++m) {
      if (is_mfa(make_fsfa(n, k, m).members(), k)) out.emplace_back(k, m);
    }
  }
  return out;
}

/// Weight-ratio grid for sweeps on levels {k-1, k} of B_n. Contains every
/// case boundary of the closed-form table, 1/i for i <= k, ratios making
/// (i-1)(lambda+1) integral, n-k+1 and its neighbours, topped up with seeded
/// random p/q to at least `min_count` values. Sorted and distinct.
inline std::vector<Rational> lambda_grid(int n, int k, std::uint64_t seed = 1, std::size_t min_count = 40) {
  std::set<Rational> g;
  for (int i = 1; i <= std::max(k, 1); ++i) g.insert(make_rational(1, i));
  for (int i = 2; i <= k; ++i) {
    g.insert(make_rational(2, i - 1));
    if (n - k > 0) g.insert(make_rational(n - k, i - 1));
    for (int j = i; j <= i + 3; ++j) g.insert(make_rational(j, i - 1) - 1);
  }
  const int pivot = n - k + 1;
  g.insert(Rational(pivot));
  g.insert(Rational(2 * pivot));
  g.insert(make_rational(pivot, 2));
  g.insert(Rational(pivot) + make_rational(1, 7));
  if (pivot > 1) g.insert(Rational(pivot) - make_rational(1, 7));
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<int> pick(1, 40);
  while (g.size() < min_count) g.insert(make_rational(pick(rng), pick(rng)));
  return {g.begin(), g.end()};
}

/// One line of a verification sweep.
struct CheckLine {
  std::string suite;
  std::string params;
  bool pass = true;
  std::string detail;
};

struct SweepConfig {
  int n_min = 1;
  int n_max = 8;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultCap;
  std::size_t min_lambdas = 40;
  std::uint64_t shadow_samples = 50;
};

inline std::string join_m(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + "}";
}

inline std::string join_m(const std::vector<BigInt>& v) {
  std::string s = "{";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + v[j].str();
  return s + "}";
}

/// Shadow formula vs enumeration, plus random Kruskal-Katona spot checks.
inline std::vector<CheckLine> sweep_shadows(const SweepConfig& cfg) {
  std::vector<CheckLine> out;
  for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto r = brute_shadow_check(n, k, cfg.shadow_samples, cfg.seed, std::nullopt, cfg.cap);
      out.push_back({"shadows", "n=" + std::to_string(n) + " k=" + std::to_string(k), r.pass,
                     r.pass ? std::to_string(r.checked) + " checks" : r.counterexample});
    }
  }
  return out;
}

/// Closed-form optima against exhaustive argmin of g, both modes.
inline std::vector<CheckLine> sweep_optima(const SweepConfig& cfg) {
  std::vector<CheckLine> out;
  for (int n = std::max(cfg.n_min, 3); n <= cfg.n_max; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const LevelTable t = level_table(n, k, cfg.cap);
      std::uint64_t checked = 0;
      std::string failure;
      for (const auto& lambda : lambda_grid(n, k, cfg.seed, cfg.min_lambdas)) {
        for (Mode mode : {Mode::fsfa, Mode::msfa}) {
          const auto expected = brute_min_g(t, lambda, mode == Mode::msfa);
          const auto rep = optimize(n, k, WeightSpec::from_lambda(lambda), mode);
          std::vector<BigInt> want(expected.argmin.begin(), expected.argmin.end());
          const auto got = rep.m_values();
          ++checked;
          if (got != want) {
            failure = std::string("mode=") + to_string(mode) + " lambda=" + to_string(lambda) +
                      " expected=" + join_m(expected.argmin) + " actual=" + join_m(got);
            break;
          }
        }
        if (!failure.empty()) break;
      }
      out.push_back({"optima", "n=" + std::to_string(n) + " k=" + std::to_string(k), failure.empty(),
                     failure.empty() ? std::to_string(checked) + " checks" : failure});
    }
  }
  return out;
}

/// Cascade criterion, last-set criterion and the definition agree.
inline std::vector<CheckLine> sweep_maximality(const SweepConfig& cfg) {
  std::vector<CheckLine> out;
  for (int n = std::max(cfg.n_min, 2); n <= cfg.n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      const BigInt top = binom(n, k);
      if (top + binom(n, k - 1) > cfg.cap) throw capacity_error("maximality sweep exceeds the cap");
      std::string failure;
      std::uint64_t checked = 0;
      for (BigInt m = 1; m <= top; ++m) {
        const Fsfa f = make_fsfa(n, k, m);
        const bool by_cascade = is_msfa_cascade(f);
        const bool by_last = is_msfa_lastset(f);
        const bool by_def = is_mfa(f.members(cfg.cap), k);
        ++checked;
        if (by_cascade != by_last || by_last != by_def) {
          failure = "m=" + m.str() + " cascade=" + std::to_string(by_cascade) +
                    " lastset=" + std::to_string(by_last) + " definition=" + std::to_string(by_def);
          break;
        }
      }
      out.push_back({"maximality", "n=" + std::to_string(n) + " k=" + std::to_string(k), failure.empty(),
                     failure.empty() ? std::to_string(checked) + " checks" : failure});
    }
  }
  return out;
}

/// Empirical Flat Antichain Theorem check for each n in range (n <= 6).
inline std::vector<CheckLine> sweep_flat(const SweepConfig& cfg) {
  if (cfg.n_max > kMaxAntichainN) throw capacity_error("flat suite supports n <= 6");
  std::vector<CheckLine> out;
  for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
    const auto r = check_flat_theorem(n);
    std::string detail = std::to_string(r.antichains) + " antichains (empty family included), " +
                         std::to_string(r.classes) + " classes";
    if (!r.pass) {
      detail = "unmatched size/volume pair (" + std::to_string(r.unmatched.front().first) + "," +
               std::to_string(r.unmatched.front().second) + ")";
    }
    out.push_back({"flat", "n=" + std::to_string(n), r.pass, detail});
  }
  return out;
}

}  // namespace flatchain::oracle
