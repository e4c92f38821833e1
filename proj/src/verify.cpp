#include "toughham/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace toughham {

bool GraphVerdicts::failed() const {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ClaimReport& r) { return r.verdict == Verdict::kFail; });
}

std::vector<ClaimReport> verify_graph(const Graph& g, const VerifyOptions& options) {
  ClaimContext ctx(g);
  std::vector<ClaimReport> out;
  for (ClaimId id : options.checks) {
    if (id == ClaimId::kL2_7) {
      for (const auto& t : options.degree_bound_ts) out.push_back(ctx.min_degree_bound(t));
    } else {
      out.push_back(ctx.run(id));
    }
  }
  return out;
}

namespace {

void evaluate(const GraphRecord& rec, const VerifyOptions& options, GraphVerdicts& out) {
  out.line = rec.line;
  if (!rec.graph) {
    out.error = rec.error;
    return;
  }
  out.graph6 = encode_graph6(*rec.graph);
  out.reports = verify_graph(*rec.graph, options);
}

}  // namespace

VerifySummary verify_stream(const RecordSource& source, const VerifyOptions& options,
                            const VerdictSink& sink) {
  VerifySummary summary;
  const int workers = std::max(1, options.workers);
  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  std::size_t index = 0;
  bool more = true;
  while (more) {
    std::vector<GraphRecord> records;
    while (records.size() < batch) {
      auto rec = source();
      if (!rec) {
        more = false;
        break;
      }
      records.push_back(std::move(*rec));
    }
    if (records.empty()) break;

    std::vector<GraphVerdicts> results(records.size());
    if (workers == 1 || records.size() == 1) {
      for (std::size_t i = 0; i < records.size(); ++i) evaluate(records[i], options, results[i]);
    } else {
      std::atomic<std::size_t> cursor{0};
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = cursor++; i < records.size(); i = cursor++) {
              evaluate(records[i], options, results[i]);
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
            cursor = records.size();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (auto& r : results) {
      r.index = index++;
      if (!r.error.empty()) {
        ++summary.parse_errors;
      } else {
        ++summary.graphs;
        for (const auto& rep : r.reports) {
          auto& tally = summary.claims[rep.id];
          switch (rep.verdict) {
            case Verdict::kPass: ++tally.pass; break;
            case Verdict::kFail: ++tally.fail; break;
            case Verdict::kHypothesesNotMet: ++tally.not_met; break;
          }
        }
        if (r.failed()) ++summary.fails;
      }
      if (sink) sink(r);
    }
  }
  return summary;
}

}  // namespace toughham
