#pragma once

#include <json.hpp>

#include "toughham/claims.hpp"
#include "toughham/extension.hpp"
#include "toughham/toughness.hpp"
#include "toughham/verify.hpp"

namespace toughham::json {

using Json = nlohmann::ordered_json;

/// {"num": p, "den": q} or {"infinite": true}.
Json toughness(const ToughnessValue& v);
Json rational(const Rational& r);

/// {"claim", "verdict"[, "t"][, "detail", "witness"]}; detail and witness
/// appear for fails only.
Json claim_report(const ClaimReport& r);
Json graph_verdicts(const GraphVerdicts& v);
Json summary(const VerifySummary& s);

Json rule_witness(const RuleWitness& w);

}  // namespace toughham::json
