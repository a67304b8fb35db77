#pragma once

// Machine-readable reports. Integers that can grow beyond 64 bits are decimal
// strings and rationals are "p/q" strings; small structural integers (n, k,
// cascade entries) are plain JSON numbers. Key order is fixed.

#include <string>
#include <vector>

#include <json.hpp>

#include "flatchain/antichain.hpp"
#include "flatchain/cascade.hpp"
#include "flatchain/extremal.hpp"
#include "flatchain/fsfa.hpp"
#include "flatchain/oracle.hpp"
#include "flatchain/subsets.hpp"

namespace flatchain::report {

using Json = nlohmann::ordered_json;

inline Json kset_json(const KSet& s) {
  Json a = Json::array();
  for (int e : s.elements()) a.push_back(e);
  return a;
}

inline Json family_members_json(const Family& fam) {
  Json a = Json::array();
  for (const auto& s : fam) a.push_back(kset_json(s));
  return a;
}

inline Json cascade_json(const Cascade& c) {
  Json j;
  j["k"] = c.k();
  j["a"] = c.descending();
  j["m"] = cascade_value(c).str();
  j["shadow"] = shadow_size(c).str();
  return j;
}

inline Json family_json(const Family& fam) {
  const auto p = profile(fam);
  const auto flat = is_flat(fam);
  bool ffa = false;
  bool mfa = false;
  if (flat.flat && !fam.empty()) {
    ffa = is_ffa(fam);
    mfa = ffa && is_mfa(fam);
  }
  Json j;
  j["n"] = fam.ground();
  Json prof = Json::array();
  for (const auto& c : p.counts) prof.push_back(c.str());
  j["profile"] = prof;
  j["size"] = p.size().str();
  j["volume"] = p.volume().str();
  j["blym"] = to_string(blym(fam));
  j["antichain"] = is_antichain(fam);
  j["flat"] = flat.flat;
  j["ffa"] = ffa;
  j["mfa"] = mfa;
  return j;
}

inline Json fsfa_json(const Fsfa& f) {
  Json j;
  j["n"] = f.n;
  j["k"] = f.k;
  j["m"] = f.m.str();
  j["cascade"] = f.cascade.descending();
  j["sizeA"] = f.size_a.str();
  j["sizeB"] = f.size_b.str();
  j["size"] = f.size().str();
  j["volume"] = f.volume().str();
  j["blym"] = to_string(f.blym());
  j["msfa"] = is_msfa(f);
  return j;
}

inline Json optimum_report_json(const OptimumReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["alpha"] = to_string(r.spec.alpha());
  j["beta"] = to_string(r.spec.beta());
  j["lambda"] = to_string(r.spec.lambda());
  j["mode"] = to_string(r.mode);
  j["min_weight"] = to_string(r.min_weight);
  Json opt = Json::array();
  for (const auto& o : r.optima) {
    Json e;
    e["a"] = o.cascade.descending();
    e["m"] = o.m.str();
    e["sizeB"] = o.size_b.str();
    opt.push_back(e);
  }
  j["optima"] = opt;
  j["canonical"] = r.canonical;
  return j;
}

inline Json check_lines_json(const std::vector<oracle::CheckLine>& lines) {
  Json a = Json::array();
  for (const auto& l : lines) {
    Json e;
    e["suite"] = l.suite;
    e["params"] = l.params;
    e["pass"] = l.pass;
    e["detail"] = l.detail;
    a.push_back(e);
  }
  return a;
}

/// One "suite<TAB>params<TAB>PASS|FAIL<TAB>detail" line per check.
inline std::string check_lines_tsv(const std::vector<oracle::CheckLine>& lines) {
  std::string out = "suite\tparams\tresult\tdetail\n";
  for (const auto& l : lines) {
    out += l.suite + "\t" + l.params + "\t" + (l.pass ? "PASS" : "FAIL") + "\t" + l.detail + "\n";
  }
  return out;
}

inline Json probe_json(const oracle::ProbeReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = std::to_string(r.m);
  j["size"] = std::to_string(r.size);
  j["volume"] = std::to_string(r.volume);
  j["equivalent"] = std::to_string(r.equivalent);
  j["non_flat"] = std::to_string(r.non_flat);
  j["finding"] = r.non_flat == 0 ? "none found" : "non-flat equivalent found";
  j["witnesses"] = r.witnesses;
  j["note"] = "exhaustive search evidence, not a proof";
  return j;
}

inline Json flat_theorem_json(const oracle::FlatTheoremReport& r) {
  Json j;
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["antichains"] = std::to_string(r.antichains);
  j["convention"] = "the empty family is counted as an antichain";
  j["classes"] = std::to_string(r.classes);
  Json un = Json::array();
  for (auto [s, v] : r.unmatched) un.push_back(Json::array({s, v}));
  j["unmatched"] = un;
  return j;
}

}  // namespace flatchain::report
