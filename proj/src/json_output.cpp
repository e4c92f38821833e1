#include "toughham/json_output.hpp"

namespace toughham::json {

Json toughness(const ToughnessValue& v) {
  if (v.infinite) return Json{{"infinite", true}};
  return rational(v.value);
}

Json rational(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json claim_report(const ClaimReport& r) {
  Json out;
  out["claim"] = claim_name(r.id);
  out["verdict"] = verdict_name(r.verdict);
  if (r.parameter) out["t"] = r.parameter->to_string();
  if (r.verdict == Verdict::kFail) {
    out["detail"] = r.detail;
    Json w = Json::object();
    for (const auto& [name, vertices] : r.witness) w[name] = vertices;
    out["witness"] = std::move(w);
  }
  return out;
}

Json graph_verdicts(const GraphVerdicts& v) {
  Json out;
  out["index"] = v.index;
  out["line"] = v.line;
  if (!v.error.empty()) {
    out["error"] = v.error;
    return out;
  }
  out["graph6"] = v.graph6;
  Json reports = Json::array();
  for (const auto& r : v.reports) reports.push_back(claim_report(r));
  out["reports"] = std::move(reports);
  return out;
}

Json summary(const VerifySummary& s) {
  Json claims = Json::object();
  for (ClaimId id : all_claims()) {
    auto it = s.claims.find(id);
    if (it == s.claims.end()) continue;
    claims[std::string(claim_name(id))] = Json{{"pass", it->second.pass},
                                               {"fail", it->second.fail},
                                               {"hypotheses-not-met", it->second.not_met}};
  }
  Json body;
  body["graphs"] = s.graphs;
  body["parse_errors"] = s.parse_errors;
  body["fails"] = s.fails;
  body["claims"] = std::move(claims);
  return Json{{"summary", std::move(body)}};
}

Json rule_witness(const RuleWitness& w) {
  Json out = Json::object();
  for (const auto& [name, v] : w) out[name] = v;
  return out;
}

}  // namespace toughham::json
