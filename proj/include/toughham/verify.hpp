#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toughham/claims.hpp"
#include "toughham/graph_io.hpp"

namespace toughham {

struct VerifyOptions {
  std::vector<ClaimId> checks;
  /// Values of t for L2.7.
  std::vector<Rational> degree_bound_ts{Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  int workers = 1;
  /// Records buffered per round; output is re-sequenced within each round.
  std::size_t batch = 512;
};

struct GraphVerdicts {
  /// 0-based position in the stream, parse errors included.
  std::size_t index = 0;
  int line = 0;
  std::string graph6;
  std::vector<ClaimReport> reports;
  /// Parse error text; reports is empty when set.
  std::string error;

  bool failed() const;
};

struct ClaimTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_met = 0;
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t parse_errors = 0;
  std::size_t fails = 0;
  /// Keyed by claim; all L2.7 instances share one tally.
  std::map<ClaimId, ClaimTally> claims;
};

using RecordSource = std::function<std::optional<GraphRecord>()>;
using VerdictSink = std::function<void(const GraphVerdicts&)>;

/// Runs the selected checks on every record. The sink sees records in input
/// order whatever the worker count.
VerifySummary verify_stream(const RecordSource& source, const VerifyOptions& options,
                            const VerdictSink& sink);

/// Checks one graph with the given options.
std::vector<ClaimReport> verify_graph(const Graph& g, const VerifyOptions& options);

}  // namespace toughham
