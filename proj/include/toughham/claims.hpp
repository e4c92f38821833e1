#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

enum class ClaimId { kL1_5, kL2_2, kL2_3, kL2_5, kL2_6, kL2_7, kC2a, kC2b, kC2c, kC2d, kC3, kC4a, kC4b, kThm1 };

std::string_view claim_name(ClaimId id);
/// Inverse of claim_name; throws std::invalid_argument on unknown names.
ClaimId parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

enum class Verdict { kPass, kFail, kHypothesesNotMet };

std::string_view verdict_name(Verdict v);

/// Named vertex lists, e.g. {"S", {0, 3}}, {"cycle", {...}}.
using Witness = std::vector<std::pair<std::string, std::vector<int>>>;

struct ClaimReport {
  ClaimId id = ClaimId::kThm1;
  Verdict verdict = Verdict::kHypothesesNotMet;
  Witness witness;
  std::string detail;
  /// The t of a parametrised check.
  std::optional<Rational> parameter;

  const std::vector<int>* find(std::string_view name) const;
};

/// Lazily computed facts about one graph, shared by every check run on it.
class ClaimContext {
 public:
  explicit ClaimContext(const Graph& g);
  ~ClaimContext();
  ClaimContext(const ClaimContext&) = delete;
  ClaimContext& operator=(const ClaimContext&) = delete;

  const Graph& graph() const { return g_; }

  ClaimReport theorem1();
  ClaimReport cut_structure();
  ClaimReport trivial_components();
  ClaimReport min_degree_bound(const Rational& t);
  std::vector<ClaimReport> sufficient_conditions();
  std::vector<ClaimReport> longest_cycle_claims();

  /// One claim; L2.7 needs t.
  ClaimReport run(ClaimId id, const std::optional<Rational>& t = std::nullopt);

 private:
  struct Facts;
  const Graph& g_;
  std::unique_ptr<Facts> facts_;
};

ClaimReport check_theorem1(const Graph& g);
ClaimReport check_cut_structure(const Graph& g);
ClaimReport check_trivial_components(const Graph& g);
/// Throws std::invalid_argument for t <= 0.
ClaimReport check_min_degree_bound(const Graph& g, const Rational& t);
/// L1.5, L2.2, L2.3 in that order.
std::vector<ClaimReport> check_sufficient_conditions(const Graph& g);
/// C2a, C2b, C2c, C2d, C3, C4a, C4b in that order, against a longest cycle.
std::vector<ClaimReport> check_longest_cycle_claims(const Graph& g);

/// The same seven conditions against an arbitrary cycle. Only meaningful as
/// a claim check when c is longest; on shorter cycles fails are expected.
std::vector<ClaimReport> check_cycle_claims(const Graph& g, const OrientedCycle& c);

/// Re-derives the violation a fail report's witness claims to exhibit.
bool witness_reproduces(const Graph& g, const ClaimReport& report);

}  // namespace toughham
