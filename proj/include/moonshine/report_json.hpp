// JSON serialization of pipeline reports (big integers as decimal strings).
#pragma once

#include <json.hpp>

#include "moonshine/spectra.hpp"

namespace ms {

inline nlohmann::json report_to_json(const InvarianceReport& rep) {
  nlohmann::json j;
  j["k"] = rep.k;
  j["n_chi"] = rep.n.get_str();
  j["cusp_verdicts"] = nlohmann::json::array();
  for (const auto& v : rep.cusp_verdicts) {
    nlohmann::json e;
    e["denominator"] = v.cls.d.get_str();
    e["residue"] = v.cls.r.get_str();
    e["verdict"] = verdict_name(v.verdict);
    e["detail"] = v.detail;
    if (!v.candidates.empty()) {
      e["candidates"] = nlohmann::json::array();
      for (const Rat& a : v.candidates) e["candidates"].push_back(rat_to_string(a));
    }
    j["cusp_verdicts"].push_back(std::move(e));
  }
  j["translation_verdicts"] = nlohmann::json::object();
  for (const auto& v : rep.translation_verdicts) {
    nlohmann::json e;
    e["verdict"] = verdict_name(v.verdict);
    e["detail"] = v.detail;
    j["translation_verdicts"][v.r.get_str()] = std::move(e);
  }
  j["conclusion"] = rep.conclusion;
  j["truncated"] = rep.truncated;
  return j;
}

inline std::string factorization_string(const Int& n) {
  if (n == 1) return "1";
  std::string out;
  for (auto& [p, e] : factorize(n)) {
    if (!out.empty()) out += "*";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace ms
