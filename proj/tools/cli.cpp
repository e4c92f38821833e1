#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toughham/enumeration.hpp"
#include "toughham/extension.hpp"
#include "toughham/generators.hpp"
#include "toughham/graph_io.hpp"
#include "toughham/hamilton.hpp"
#include "toughham/json_output.hpp"
#include "toughham/menger.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"
#include "toughham/verify.hpp"

namespace toughham::cli {
namespace {

using Json = json::Json;

constexpr int kHamiltonWarnOrder = 24;
constexpr int kLongestCycleWarnOrder = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maps internal vertex ids to the labels used in the input.
class Labels {
 public:
  Labels(int n, std::vector<long long> labels) : n_(n), labels_(std::move(labels)) {}

  long long label(int v) const { return labels_.empty() ? v : labels_[v]; }

  int vertex(long long label) const {
    if (labels_.empty()) {
      if (label < 0 || label >= n_) throw UsageError("unknown vertex " + std::to_string(label));
      return static_cast<int>(label);
    }
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw UsageError("unknown vertex " + std::to_string(label));
    return static_cast<int>(it - labels_.begin());
  }

  Json list(const std::vector<int>& vs) const {
    Json out = Json::array();
    for (int v : vs) out.push_back(label(v));
    return out;
  }

 private:
  int n_;
  std::vector<long long> labels_;
};

std::vector<long long> parse_label_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in vertex list '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad vertex '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

struct Common {
  std::string input;
  std::string format = "json";
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  void warn(const std::string& msg) { err_ << "toughham: warning: " << msg << '\n'; }

  void emit(const Json& j, const std::string& format) {
    if (format == "table") {
      for (const auto& [key, value] : j.items()) {
        out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    } else {
      out_ << j.dump() << '\n';
    }
  }

  template <typename Fn>
  int per_graph(const Common& c, Fn&& fn) {
    std::ifstream file;
    std::istream* src = &in_;
    if (!c.input.empty() && c.input != "-") {
      file.open(c.input);
      if (!file) throw UsageError("cannot read " + c.input);
      src = &file;
    }
    GraphReader reader(*src);
    int status = kExitOk;
    bool any = false;
    while (auto rec = reader.next()) {
      any = true;
      if (!rec->graph) {
        err_ << "toughham: line " << rec->line << ": " << rec->error << '\n';
        status = kExitUsage;
        continue;
      }
      Labels labels(rec->graph->order(), rec->labels);
      emit(fn(*rec->graph, labels), c.format);
    }
    if (!any) throw UsageError("no graph in input");
    return status;
  }

  std::istream& in() { return in_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

void warn_soft_limit(Runner& r, int n) {
  r.warn("exhaustive enumeration at n = " + std::to_string(n) +
         " is above the soft limit of " + std::to_string(kSoftEnumerationLimit));
}

Json analyze(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["toughness"] = json::toughness(toughness_exact(g).value);
  j["alpha"] = independence_number(g).size;
  j["kappa"] = vertex_connectivity(g);
  j["min_degree"] = g.order() == 0 ? 0 : g.min_degree();
  for (const auto& name : gen::pattern_names()) {
    j[name + "_free"] = is_free(g, gen::pattern(name));
  }
  return j;
}

int default_workers() {
  const char* env = std::getenv("TOUGHHAM_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw UsageError("TOUGHHAM_WORKERS must be a positive integer");
  return static_cast<int>(v);
}

struct VerifyArgs {
  Common common;
  std::string checks;
  int n_min = 1;
  int n_max = 0;
  bool connected = false;
  int workers = 0;
  bool summary_only = false;
  std::vector<std::string> ts;
};

int run_verify(Runner& r, const VerifyArgs& a) {
  VerifyOptions opts;
  if (a.checks == "all") {
    opts.checks = all_claims();
  } else {
    std::stringstream ss(a.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        opts.checks.push_back(parse_claim(item));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (opts.checks.empty()) throw UsageError("--checks is empty");
  }
  if (!a.ts.empty()) {
    opts.degree_bound_ts.clear();
    for (const auto& t : a.ts) {
      Rational v = Rational::parse(t);
      if (v <= Rational(0)) throw UsageError("--t values must be positive");
      opts.degree_bound_ts.push_back(v);
    }
  }
  opts.workers = a.workers > 0 ? a.workers : default_workers();

  std::ifstream file;
  std::optional<GraphReader> reader;
  std::vector<Graph> level;
  std::size_t level_pos = 0;
  int next_n = a.n_min;
  int counter = 0;
  RecordSource source;
  if (a.n_max > 0) {
    if (!a.common.input.empty()) throw UsageError("--n-max and an input file are exclusive");
    if (a.n_min < 1 || a.n_min > a.n_max) throw UsageError("need 1 <= --n-min <= --n-max");
    if (a.n_max > kMaxEnumerationOrder) {
      throw UsageError("--n-max is limited to " + std::to_string(kMaxEnumerationOrder));
    }
    if (a.n_max > kSoftEnumerationLimit) warn_soft_limit(r, a.n_max);
    source = [&]() -> std::optional<GraphRecord> {
      while (level_pos == level.size()) {
        if (next_n > a.n_max) return std::nullopt;
        level = enumerate_all({next_n++, a.connected, {}});
        level_pos = 0;
      }
      GraphRecord rec;
      rec.line = ++counter;
      rec.graph = std::move(level[level_pos++]);
      return rec;
    };
  } else {
    std::istream* src = &r.in();
    if (!a.common.input.empty() && a.common.input != "-") {
      file.open(a.common.input);
      if (!file) throw UsageError("cannot read " + a.common.input);
      src = &file;
    }
    reader.emplace(*src);
    source = [&]() -> std::optional<GraphRecord> {
      while (auto rec = reader->next()) {
        if (a.connected && rec->graph && !is_connected(*rec->graph)) continue;
        return rec;
      }
      return std::nullopt;
    };
  }

  const bool table = a.common.format == "table";
  auto summary = verify_stream(source, opts, [&](const GraphVerdicts& v) {
    if (!v.error.empty()) {
      r.err() << "toughham: line " << v.line << ": " << v.error << '\n';
      return;
    }
    if (a.summary_only && !v.failed()) return;
    if (table) {
      r.out() << v.graph6;
      for (const auto& rep : v.reports) {
        r.out() << ' ' << claim_name(rep.id);
        if (rep.parameter) r.out() << '[' << rep.parameter->to_string() << ']';
        r.out() << '=' << verdict_name(rep.verdict);
      }
      r.out() << '\n';
    } else {
      r.out() << json::graph_verdicts(v).dump() << '\n';
    }
  });
  if (table) {
    r.out() << "graphs: " << summary.graphs << "\nparse_errors: " << summary.parse_errors
            << "\nfails: " << summary.fails << '\n';
    for (const auto& [id, t] : summary.claims) {
      r.out() << claim_name(id) << ": pass " << t.pass << ", fail " << t.fail
              << ", hypotheses-not-met " << t.not_met << '\n';
    }
  } else {
    r.out() << json::summary(summary).dump() << '\n';
  }
  if (summary.fails > 0) return kExitClaimFailed;
  return summary.parse_errors > 0 ? kExitUsage : kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "Graph file, graph6 or edge list (default: stdin)");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact toughness, hamiltonicity and cycle-extension analyses", "toughham"};
  app.require_subcommand(1);

  Common c_analyze, c_tough, c_alpha, c_free, c_ham, c_long, c_menger, c_extend;
  auto* analyze_cmd = app.add_subcommand("analyze", "Toughness, alpha, kappa, degree and pattern flags");
  add_common(analyze_cmd, c_analyze);
  auto* tough_cmd = app.add_subcommand("toughness", "Exact toughness with a tough set");
  add_common(tough_cmd, c_tough);
  auto* alpha_cmd = app.add_subcommand("alpha", "Independence number with a maximum independent set");
  add_common(alpha_cmd, c_alpha);

  std::string pattern_name;
  auto* free_cmd = app.add_subcommand("free", "Induced-pattern freeness");
  add_common(free_cmd, c_free);
  free_cmd->add_option("--pattern", pattern_name, "Pattern name")
      ->required()
      ->check(CLI::IsMember(gen::pattern_names()));

  auto* ham_cmd = app.add_subcommand("hamilton", "Hamiltonian cycle");
  add_common(ham_cmd, c_ham);
  auto* long_cmd = app.add_subcommand("longest-cycle", "Longest cycle and circumference");
  add_common(long_cmd, c_long);

  std::string x1_text, x2_text;
  int k = 0;
  auto* menger_cmd = app.add_subcommand("menger", "k disjoint X1-X2 paths");
  add_common(menger_cmd, c_menger);
  menger_cmd->add_option("--x1", x1_text, "Comma-separated vertices")->required();
  menger_cmd->add_option("--x2", x2_text, "Comma-separated vertices")->required();
  menger_cmd->add_option("--k", k, "Number of paths")->required();

  std::string cycle_text;
  auto* extend_cmd = app.add_subcommand("extend", "Apply extension rules until none fires");
  add_common(extend_cmd, c_extend);
  extend_cmd->add_option("--cycle", cycle_text, "Comma-separated cycle, in order")->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run claim checks over a graph stream");
  add_common(verify_cmd, va.common);
  verify_cmd->add_option("--checks", va.checks, "Comma-separated claim ids, or 'all'")->required();
  verify_cmd->add_option("--n-max", va.n_max, "Enumerate all graphs up to this order instead of reading input");
  verify_cmd->add_option("--n-min", va.n_min, "Smallest enumerated order")->capture_default_str();
  verify_cmd->add_flag("--connected", va.connected, "Connected graphs only");
  verify_cmd->add_option("--workers", va.workers, "Worker threads (default: TOUGHHAM_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--summary-only", va.summary_only, "Print only failing graphs and the summary");
  verify_cmd->add_option("--t", va.ts, "Values of t for L2.7 (default 1/2 1 2 3)");

  int enum_n = 0;
  bool enum_connected = false;
  std::vector<std::string> enum_filters;
  auto* enum_cmd = app.add_subcommand("enumerate", "One graph6 line per isomorphism class");
  enum_cmd->add_option("--n", enum_n, "Order")->required();
  enum_cmd->add_flag("--connected", enum_connected, "Connected graphs only");
  enum_cmd->add_option("--filter", enum_filters, "Predicate from the filter registry (repeatable)");

  int rand_n = 0;
  std::string rand_p;
  std::uint64_t seed = 0;
  int count = 1;
  auto* rand_cmd = app.add_subcommand("random", "Seeded G(n, p) samples as graph6");
  rand_cmd->add_option("--n", rand_n, "Order")->required()->check(CLI::Range(0, kMaxOrder));
  rand_cmd->add_option("--p", rand_p, "Edge probability, e.g. 1/2 or 0.3")->required();
  rand_cmd->add_option("--seed", seed, "Seed; sample i uses seed + i")->required();
  rand_cmd->add_option("--count", count, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner r(in, out, err);
  try {
    if (analyze_cmd->parsed()) {
      return r.per_graph(c_analyze, [](const Graph& g, const Labels&) { return analyze(g); });
    }
    if (tough_cmd->parsed()) {
      return r.per_graph(c_tough, [](const Graph& g, const Labels& l) {
        auto t = toughness_exact(g);
        return Json{{"toughness", json::toughness(t.value)},
                    {"tough_set", t.witness ? l.list(t.witness->members()) : Json(nullptr)}};
      });
    }
    if (alpha_cmd->parsed()) {
      return r.per_graph(c_alpha, [](const Graph& g, const Labels& l) {
        auto a = independence_number(g);
        return Json{{"alpha", a.size}, {"independent_set", l.list(a.witness.members())}};
      });
    }
    if (free_cmd->parsed()) {
      return r.per_graph(c_free, [&](const Graph& g, const Labels& l) {
        auto e = find_induced(gen::pattern(pattern_name), g);
        return Json{{"pattern", pattern_name},
                    {"free", !e.has_value()},
                    {"embedding", e ? l.list(e->mapping) : Json(nullptr)}};
      });
    }
    if (ham_cmd->parsed()) {
      return r.per_graph(c_ham, [&](const Graph& g, const Labels& l) {
        if (g.order() > kHamiltonWarnOrder) r.warn("hamiltonicity search on more than 24 vertices");
        auto c = hamiltonian_cycle(g);
        Json j{{"hamiltonian", c.has_value()}};
        if (c) j["cycle"] = l.list(c->vertices());
        return j;
      });
    }
    if (long_cmd->parsed()) {
      return r.per_graph(c_long, [&](const Graph& g, const Labels& l) {
        if (g.order() > kLongestCycleWarnOrder) r.warn("longest-cycle search on more than 16 vertices");
        if (!has_cycle(g)) return Json{{"circumference", 0}, {"cycle", nullptr}};
        auto lc = longest_cycle(g);
        return Json{{"circumference", lc.circumference}, {"cycle", l.list(lc.cycle.vertices())}};
      });
    }
    if (menger_cmd->parsed()) {
      return r.per_graph(c_menger, [&](const Graph& g, const Labels& l) {
        VertexSet x1, x2;
        for (long long v : parse_label_list(x1_text)) x1.insert(l.vertex(v));
        for (long long v : parse_label_list(x2_text)) x2.insert(l.vertex(v));
        auto res = disjoint_paths(g, x1, x2, k);
        Json paths = Json::array();
        for (const auto& p : res.paths) paths.push_back(l.list(p.vertices()));
        return Json{{"k", k}, {"paths", std::move(paths)}};
      });
    }
    if (extend_cmd->parsed()) {
      return r.per_graph(c_extend, [&](const Graph& g, const Labels& l) {
        std::vector<int> seq;
        for (long long v : parse_label_list(cycle_text)) seq.push_back(l.vertex(v));
        OrientedCycle start(g, seq);
        auto fix = extend_to_fixpoint(g, start);
        Json steps = Json::array();
        for (const auto& s : fix.steps) {
          Json w = Json::object();
          for (const auto& [name, v] : s.witness) w[name] = l.label(v);
          steps.push_back(Json{{"rule", rule_name(s.rule)},
                               {"witness", std::move(w)},
                               {"old_len", s.old_length},
                               {"new_len", s.new_length}});
        }
        return Json{{"initial_length", start.size()},
                    {"steps", std::move(steps)},
                    {"cycle", l.list(fix.cycle.vertices())},
                    {"hamiltonian", fix.cycle.size() == g.order()}};
      });
    }
    if (verify_cmd->parsed()) return run_verify(r, va);
    if (enum_cmd->parsed()) {
      if (enum_n > kSoftEnumerationLimit && enum_n <= kMaxEnumerationOrder) warn_soft_limit(r, enum_n);
      EnumerationSpec spec{enum_n, enum_connected, enum_filters};
      enumerate_graphs(spec, [&](const Graph& g) {
        out << encode_graph6(g) << '\n';
        return true;
      });
      return kExitOk;
    }
    if (rand_cmd->parsed()) {
      const Rational p = Rational::parse(rand_p);
      for (int i = 0; i < count; ++i) out << encode_graph6(random_graph(rand_n, p, seed + i)) << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "toughham: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "toughham: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace toughham::cli
