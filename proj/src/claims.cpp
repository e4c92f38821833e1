#include "toughham/claims.hpp"

#include <array>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "toughham/generators.hpp"
#include "toughham/hamilton.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

namespace toughham {
namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 14> kNames{{
    {ClaimId::kL1_5, "L1.5"},
    {ClaimId::kL2_2, "L2.2"},
    {ClaimId::kL2_3, "L2.3"},
    {ClaimId::kL2_5, "L2.5"},
    {ClaimId::kL2_6, "L2.6"},
    {ClaimId::kL2_7, "L2.7"},
    {ClaimId::kC2a, "C2a"},
    {ClaimId::kC2b, "C2b"},
    {ClaimId::kC2c, "C2c"},
    {ClaimId::kC2d, "C2d"},
    {ClaimId::kC3, "C3"},
    {ClaimId::kC4a, "C4a"},
    {ClaimId::kC4b, "C4b"},
    {ClaimId::kThm1, "THM1"},
}};

constexpr int kMaxScanOrder = 30;

std::vector<int> members(const VertexSet& s) { return s.members(); }

ClaimReport report(ClaimId id, Verdict v, std::string detail = {}) {
  ClaimReport r;
  r.id = id;
  r.verdict = v;
  r.detail = std::move(detail);
  return r;
}

ClaimReport not_met(ClaimId id, std::string why) {
  return report(id, Verdict::kHypothesesNotMet, std::move(why));
}

VertexSet from_list(const std::vector<int>& v) { return VertexSet::from_members(v); }

// Calls fn(S) for every proper subset S of V(g); fn returns false to stop.
template <typename Fn>
void for_each_proper_subset(const Graph& g, Fn&& fn) {
  const int n = g.order();
  if (n > kMaxScanOrder) throw std::length_error("subset scan is limited to 30 vertices");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    VertexSet s;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
    if (!fn(s)) return;
  }
}

bool contains_pattern_within(const Graph& g, const VertexSet& part, const Graph& pattern) {
  return !is_free(induced_subgraph(g, part).graph, pattern);
}

// Outcome of the maximality conditions on one (cycle, component) pair.
struct CycleViolation {
  bool found = false;
  Witness witness;
};

Witness cycle_base(const OrientedCycle& c, const VertexSet& h) {
  return {{"cycle", c.vertices()}, {"H", members(h)}};
}

CycleViolation consecutive_attachments(const Graph& g, const OrientedCycle& c, const VertexSet& h) {
  const VertexSet att = g.neighborhood(h) & c.vertex_set();
  for (int x = att.first(); x >= 0; x = att.next(x)) {
    const int y = c.successor(x);
    if (att.contains(y)) {
      auto w = cycle_base(c, h);
      w.push_back({"x", {x}});
      w.push_back({"y", {y}});
      return {true, std::move(w)};
    }
  }
  return {};
}

CycleViolation adjacent_successors(const Graph& g, const OrientedCycle& c, const VertexSet& h) {
  const VertexSet att = g.neighborhood(h) & c.vertex_set();
  for (int x = att.first(); x >= 0; x = att.next(x)) {
    for (int y = att.next(x); y >= 0; y = att.next(y)) {
      if (y == c.successor(x) || x == c.successor(y)) continue;
      if (g.adjacent(c.successor(x), c.successor(y))) {
        auto w = cycle_base(c, h);
        w.push_back({"x", {x}});
        w.push_back({"y", {y}});
        return {true, std::move(w)};
      }
    }
  }
  return {};
}

// w, z in N_C(H), w1 ~ w+ outside {w, z, w+, z+}. `before` selects the cyclic
// order w, w1, z and the z+ ~ w1- test; otherwise order w, z, w1 and z+ ~ w1+.
CycleViolation claim4_violation(const Graph& g, const OrientedCycle& c, const VertexSet& h,
                                bool before) {
  const VertexSet on_cycle = c.vertex_set();
  const VertexSet att = g.neighborhood(h) & on_cycle;
  for (int w = att.first(); w >= 0; w = att.next(w)) {
    const int wp = c.successor(w);
    const VertexSet w1s = g.neighbors(wp) & on_cycle;
    for (int z = att.first(); z >= 0; z = att.next(z)) {
      if (z == w) continue;
      const int zp = c.successor(z);
      for (int w1 = w1s.first(); w1 >= 0; w1 = w1s.next(w1)) {
        if (w1 == w || w1 == z || w1 == wp || w1 == zp) continue;
        if (before != (c.forward_distance(w, w1) < c.forward_distance(w, z))) continue;
        const int partner = before ? c.predecessor(w1) : c.successor(w1);
        if (g.adjacent(zp, partner)) {
          auto wit = cycle_base(c, h);
          wit.push_back({"w", {w}});
          wit.push_back({"z", {z}});
          wit.push_back({"w1", {w1}});
          return {true, std::move(wit)};
        }
      }
    }
  }
  return {};
}

std::optional<OrientedCycle> witness_cycle(const Graph& g, const ClaimReport& r) {
  const auto* cyc = r.find("cycle");
  if (cyc == nullptr || !is_valid_cycle(g, *cyc)) return std::nullopt;
  return OrientedCycle(g, *cyc);
}

std::optional<VertexSet> witness_component(const Graph& g, const OrientedCycle& c,
                                           const ClaimReport& r) {
  const auto* h = r.find("H");
  if (h == nullptr || h->empty()) return std::nullopt;
  for (int v : *h) {
    if (v < 0 || v >= g.order()) return std::nullopt;
  }
  const VertexSet hs = from_list(*h);
  for (const auto& part : components_within(g, g.vertices() - c.vertex_set())) {
    if (part == hs) return hs;
  }
  return std::nullopt;
}

int single(const ClaimReport& r, std::string_view name) {
  const auto* v = r.find(name);
  return (v == nullptr || v->size() != 1) ? -1 : v->front();
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "?";
}

ClaimId parse_claim(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown claim id: " + std::string(name));
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kHypothesesNotMet: return "hypotheses-not-met";
  }
  return "?";
}

const std::vector<int>* ClaimReport::find(std::string_view name) const {
  for (const auto& [key, value] : witness) {
    if (key == name) return &value;
  }
  return nullptr;
}

struct ClaimContext::Facts {
  std::optional<ToughnessValue> tau;
  std::map<Rational, bool> tough;
  std::optional<IndependenceResult> alpha;
  std::optional<bool> connected;
  std::optional<std::optional<OrientedCycle>> ham;
  std::map<std::string, bool, std::less<>> free;
  std::optional<std::vector<ClaimReport>> sufficient;
  std::optional<std::vector<ClaimReport>> longest;

  const ToughnessValue& toughness(const Graph& g) {
    if (!tau) tau = toughness_exact(g).value;
    return *tau;
  }
  bool is_tough(const Graph& g, const Rational& t) {
    if (tau) return tau->infinite || tau->value >= t;
    auto it = tough.find(t);
    if (it == tough.end()) it = tough.emplace(t, is_t_tough(g, t).tough).first;
    return it->second;
  }
  const IndependenceResult& independence(const Graph& g) {
    if (!alpha) alpha = independence_number(g);
    return *alpha;
  }
  bool is_conn(const Graph& g) {
    if (!connected) connected = is_connected(g);
    return *connected;
  }
  const std::optional<OrientedCycle>& hamilton(const Graph& g) {
    if (!ham) ham = hamiltonian_cycle(g);
    return *ham;
  }
  bool pattern_free(const Graph& g, std::string_view name) {
    auto it = free.find(name);
    if (it == free.end()) it = free.emplace(std::string(name), is_free(g, gen::pattern(name))).first;
    return it->second;
  }
};

ClaimContext::ClaimContext(const Graph& g) : g_(g), facts_(std::make_unique<Facts>()) {}
ClaimContext::~ClaimContext() = default;

ClaimReport ClaimContext::theorem1() {
  const auto id = ClaimId::kThm1;
  if (g_.order() < 3) return not_met(id, "fewer than three vertices");
  if (!facts_->pattern_free(g_, "k2u3k1")) return not_met(id, "contains induced K2 u 3K1");
  if (!facts_->is_tough(g_, Rational(3))) return not_met(id, "not 3-tough");
  if (facts_->hamilton(g_)) {
    auto r = report(id, Verdict::kPass);
    r.witness.push_back({"cycle", facts_->hamilton(g_)->vertices()});
    return r;
  }
  return report(id, Verdict::kFail, "3-tough, K2 u 3K1-free, and not hamiltonian");
}

ClaimReport ClaimContext::cut_structure() {
  const auto id = ClaimId::kL2_5;
  if (g_.order() == 0 || !facts_->is_conn(g_)) return not_met(id, "not connected");
  if (!facts_->pattern_free(g_, "k2u3k1")) return not_met(id, "contains induced K2 u 3K1");
  const Graph k2k1 = gen::pattern_k2_k1();
  ClaimReport out = report(id, Verdict::kPass);
  bool exhibited = false;
  for_each_proper_subset(g_, [&](const VertexSet& s) {
    const auto parts = components_within(g_, g_.vertices() - s);
    if (parts.size() < 3) return true;
    for (const auto& part : parts) {
      if (part.size() < 2) continue;
      if (parts.size() != 3) {
        out = report(id, Verdict::kFail,
                     "nontrivial component with " + std::to_string(parts.size()) + " components");
      } else if (contains_pattern_within(g_, part, k2k1)) {
        out = report(id, Verdict::kFail, "nontrivial component contains induced K2 u K1");
      } else {
        if (!exhibited) {
          out.witness = {{"S", members(s)}, {"component", members(part)}};
          exhibited = true;
        }
        continue;
      }
      out.witness = {{"S", members(s)}, {"component", members(part)}};
      return false;
    }
    return true;
  });
  return out;
}

ClaimReport ClaimContext::trivial_components() {
  const auto id = ClaimId::kL2_6;
  if (!facts_->pattern_free(g_, "k2uk1")) return not_met(id, "contains induced K2 u K1");
  ClaimReport out = report(id, Verdict::kPass);
  for_each_proper_subset(g_, [&](const VertexSet& s) {
    const auto parts = components_within(g_, g_.vertices() - s);
    if (parts.size() < 2) return true;
    for (const auto& part : parts) {
      if (part.size() >= 2) {
        out = report(id, Verdict::kFail, "cut set leaves a nontrivial component");
        out.witness = {{"S", members(s)}, {"component", members(part)}};
        return false;
      }
    }
    return true;
  });
  return out;
}

ClaimReport ClaimContext::min_degree_bound(const Rational& t) {
  const auto id = ClaimId::kL2_7;
  if (t <= Rational(0)) throw std::invalid_argument("t must be positive");
  const int n = g_.order();
  ClaimReport out;
  if (n == 0) {
    out = not_met(id, "empty graph");
  } else if (!facts_->pattern_free(g_, "k2uk1")) {
    out = not_met(id, "contains induced K2 u K1");
  } else {
    const Rational share = Rational(n) / (t + Rational(1));
    const auto& alpha = facts_->independence(g_);
    if (Rational(alpha.size) > share) {
      out = not_met(id, "alpha exceeds n/(t+1)");
    } else if (Rational(g_.min_degree()) >= Rational(n) - share) {
      out = report(id, Verdict::kPass);
    } else {
      out = report(id, Verdict::kFail, "minimum degree below n - n/(t+1)");
      int low = 0;
      for (int v = 1; v < n; ++v) {
        if (g_.degree(v) < g_.degree(low)) low = v;
      }
      out.witness = {{"vertex", {low}}, {"independent_set", members(alpha.witness)}};
    }
  }
  out.parameter = t;
  return out;
}

std::vector<ClaimReport> ClaimContext::sufficient_conditions() {
  if (facts_->sufficient) return *facts_->sufficient;
  std::vector<ClaimReport> out;
  const int n = g_.order();
  if (n < 3) {
    for (auto id : {ClaimId::kL1_5, ClaimId::kL2_2, ClaimId::kL2_3}) {
      out.push_back(not_met(id, "fewer than three vertices"));
    }
    facts_->sufficient = out;
    return out;
  }
  const int delta = g_.min_degree();

  // Degree condition for hamiltonian-connectedness.
  if (2 * delta < n + 1) {
    out.push_back(not_met(ClaimId::kL1_5, "minimum degree below (n+1)/2"));
  } else {
    ClaimReport r = report(ClaimId::kL1_5, Verdict::kPass);
    for (int u = 0; u < n && r.verdict == Verdict::kPass; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!hamiltonian_path_between(g_, u, v)) {
          r = report(ClaimId::kL1_5, Verdict::kFail, "no hamiltonian path between the pair");
          r.witness = {{"pair", {u, v}}};
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  // Toughness and degree, with t = tau.
  const ToughnessValue& tau = facts_->toughness(g_);
  const bool degree_ok =
      tau.infinite || Rational(delta) > Rational(n) / (tau.value + Rational(1)) - Rational(1);
  if (!degree_ok) {
    out.push_back(not_met(ClaimId::kL2_2, "minimum degree not above n/(tau+1) - 1"));
  } else if (facts_->hamilton(g_)) {
    out.push_back(report(ClaimId::kL2_2, Verdict::kPass));
  } else {
    out.push_back(report(ClaimId::kL2_2, Verdict::kFail, "degree bound holds, not hamiltonian"));
  }
  out.back().parameter = tau.infinite ? std::nullopt : std::optional<Rational>(tau.value);

  // Forbidden-pattern condition. The three patterns contain every other
  // pattern the condition names, so freeness of any of those implies
  // freeness of one of these.
  std::string free_of;
  for (std::string_view name : {"p4", "k1up3", "k2u2k1"}) {
    if (facts_->pattern_free(g_, name)) free_of += (free_of.empty() ? "" : ",") + std::string(name);
  }
  if (free_of.empty()) {
    out.push_back(not_met(ClaimId::kL2_3, "contains every listed pattern"));
  } else if (!facts_->is_tough(g_, Rational(1))) {
    out.push_back(not_met(ClaimId::kL2_3, "not 1-tough"));
  } else if (facts_->hamilton(g_)) {
    out.push_back(report(ClaimId::kL2_3, Verdict::kPass, "free of " + free_of));
  } else {
    out.push_back(report(ClaimId::kL2_3, Verdict::kFail, "1-tough, free of " + free_of +
                                                             ", not hamiltonian"));
  }
  facts_->sufficient = out;
  return out;
}

namespace {

std::vector<ClaimReport> cycle_claims(const Graph& g, const OrientedCycle& c,
                                      const std::function<ToughnessValue()>& tau,
                                      const std::function<bool()>& theorem_setting) {
  std::vector<ClaimReport> out;
  const auto parts = components_within(g, g.vertices() - c.vertex_set());
  if (parts.empty()) {
    for (auto id : {ClaimId::kC2a, ClaimId::kC2b, ClaimId::kC2c, ClaimId::kC2d, ClaimId::kC3,
                    ClaimId::kC4a, ClaimId::kC4b}) {
      out.push_back(not_met(id, "cycle spans the graph"));
    }
    return out;
  }

  // Attachment count against twice the toughness, wherever N_C(H) separates.
  {
    ClaimReport r = not_met(ClaimId::kC2a, "no N_C(H) is a cut set");
    for (const auto& h : parts) {
      const VertexSet att = g.neighborhood(h) & c.vertex_set();
      if (components_within(g, g.vertices() - att).size() < 2) continue;
      const ToughnessValue t = tau();
      if (!t.infinite && Rational(att.size()) < Rational(2) * t.value) {
        r = report(ClaimId::kC2a, Verdict::kFail, "|N_C(H)| below 2 tau");
        r.witness = cycle_base(c, h);
        r.witness.push_back({"attachments", members(att)});
        break;
      }
      r = report(ClaimId::kC2a, Verdict::kPass);
    }
    out.push_back(std::move(r));
  }

  auto universal = [&](ClaimId id, auto&& test, const char* what) {
    for (const auto& h : parts) {
      auto v = test(h);
      if (v.found) {
        ClaimReport r = report(id, Verdict::kFail, what);
        r.witness = std::move(v.witness);
        return r;
      }
    }
    return report(id, Verdict::kPass);
  };

  out.push_back(universal(
      ClaimId::kC2b, [&](const VertexSet& h) { return consecutive_attachments(g, c, h); },
      "two attachments are consecutive on the cycle"));
  out.push_back(universal(
      ClaimId::kC2c, [&](const VertexSet& h) { return adjacent_successors(g, c, h); },
      "successors of two attachments are adjacent"));

  const bool gated = theorem_setting();
  if (!gated) {
    out.push_back(not_met(ClaimId::kC2d, "not 3-tough and K2 u 3K1-free"));
    out.push_back(not_met(ClaimId::kC3, "not 3-tough and K2 u 3K1-free"));
  } else {
    ClaimReport d = report(ClaimId::kC2d, Verdict::kPass);
    for (const auto& h : parts) {
      if (h.size() > 1) {
        d = report(ClaimId::kC2d, Verdict::kFail, "nontrivial component off the cycle");
        d.witness = cycle_base(c, h);
        break;
      }
    }
    out.push_back(std::move(d));
    if (parts.size() <= 3) {
      out.push_back(report(ClaimId::kC3, Verdict::kPass));
    } else {
      ClaimReport r = report(ClaimId::kC3, Verdict::kFail,
                             std::to_string(parts.size()) + " components off the cycle");
      r.witness = {{"cycle", c.vertices()}};
      out.push_back(std::move(r));
    }
  }

  out.push_back(universal(
      ClaimId::kC4a, [&](const VertexSet& h) { return claim4_violation(g, c, h, false); },
      "z+ adjacent to w1+"));
  out.push_back(universal(
      ClaimId::kC4b, [&](const VertexSet& h) { return claim4_violation(g, c, h, true); },
      "z+ adjacent to w1-"));
  return out;
}

}  // namespace

std::vector<ClaimReport> ClaimContext::longest_cycle_claims() {
  if (facts_->longest) return *facts_->longest;
  std::vector<ClaimReport> out;
  std::string why;
  if (g_.order() < 3 || !facts_->is_conn(g_)) {
    why = "not connected";
  } else if (facts_->hamilton(g_)) {
    why = "hamiltonian";
  } else if (!has_cycle(g_)) {
    why = "acyclic";
  }
  if (!why.empty()) {
    for (auto id : {ClaimId::kC2a, ClaimId::kC2b, ClaimId::kC2c, ClaimId::kC2d, ClaimId::kC3,
                    ClaimId::kC4a, ClaimId::kC4b}) {
      out.push_back(not_met(id, why));
    }
  } else {
    const auto longest = longest_cycle(g_);
    out = cycle_claims(
        g_, longest.cycle, [&] { return facts_->toughness(g_); },
        [&] { return facts_->pattern_free(g_, "k2u3k1") && facts_->is_tough(g_, Rational(3)); });
  }
  facts_->longest = out;
  return out;
}

ClaimReport ClaimContext::run(ClaimId id, const std::optional<Rational>& t) {
  switch (id) {
    case ClaimId::kThm1: return theorem1();
    case ClaimId::kL2_5: return cut_structure();
    case ClaimId::kL2_6: return trivial_components();
    case ClaimId::kL2_7:
      if (!t) throw std::invalid_argument("L2.7 needs a value of t");
      return min_degree_bound(*t);
    case ClaimId::kL1_5:
    case ClaimId::kL2_2:
    case ClaimId::kL2_3:
      for (auto& r : sufficient_conditions()) {
        if (r.id == id) return r;
      }
      break;
    default:
      for (auto& r : longest_cycle_claims()) {
        if (r.id == id) return r;
      }
      break;
  }
  throw std::logic_error("claim not produced");
}

ClaimReport check_theorem1(const Graph& g) { return ClaimContext(g).theorem1(); }
ClaimReport check_cut_structure(const Graph& g) { return ClaimContext(g).cut_structure(); }
ClaimReport check_trivial_components(const Graph& g) {
  return ClaimContext(g).trivial_components();
}
ClaimReport check_min_degree_bound(const Graph& g, const Rational& t) {
  return ClaimContext(g).min_degree_bound(t);
}
std::vector<ClaimReport> check_sufficient_conditions(const Graph& g) {
  return ClaimContext(g).sufficient_conditions();
}
std::vector<ClaimReport> check_longest_cycle_claims(const Graph& g) {
  return ClaimContext(g).longest_cycle_claims();
}

std::vector<ClaimReport> check_cycle_claims(const Graph& g, const OrientedCycle& c) {
  if (!is_valid_cycle(g, c.vertices())) throw std::invalid_argument("cycle is not valid in graph");
  return cycle_claims(
      g, c, [&] { return toughness_exact(g).value; },
      [&] { return is_free(g, gen::pattern_k2_3k1()) && is_t_tough(g, Rational(3)).tough; });
}

bool witness_reproduces(const Graph& g, const ClaimReport& r) {
  if (r.verdict != Verdict::kFail) return false;
  const int n = g.order();
  auto in_range = [&](const std::vector<int>& v) {
    for (int x : v) {
      if (x < 0 || x >= n) return false;
    }
    return true;
  };
  switch (r.id) {
    case ClaimId::kThm1:
      return n >= 3 && is_free(g, gen::pattern_k2_3k1()) && is_t_tough(g, Rational(3)).tough &&
             !is_hamiltonian(g);
    case ClaimId::kL1_5: {
      const auto* p = r.find("pair");
      if (p == nullptr || p->size() != 2 || !in_range(*p) || (*p)[0] == (*p)[1]) return false;
      return n >= 3 && 2 * g.min_degree() >= n + 1 && !hamiltonian_path_between(g, (*p)[0], (*p)[1]);
    }
    case ClaimId::kL2_2: {
      if (n < 3 || is_hamiltonian(g)) return false;
      const auto tau = toughness_exact(g).value;
      return tau.infinite ||
             Rational(g.min_degree()) > Rational(n) / (tau.value + Rational(1)) - Rational(1);
    }
    case ClaimId::kL2_3: {
      if (n < 3 || is_hamiltonian(g) || !is_t_tough(g, Rational(1)).tough) return false;
      for (std::string_view name : {"p4", "k1up3", "k2u2k1"}) {
        if (is_free(g, gen::pattern(name))) return true;
      }
      return false;
    }
    case ClaimId::kL2_5:
    case ClaimId::kL2_6: {
      const auto* s = r.find("S");
      const auto* comp = r.find("component");
      if (s == nullptr || comp == nullptr || !in_range(*s) || comp->size() < 2) return false;
      const VertexSet cut = from_list(*s);
      if (cut == g.vertices()) return false;
      const auto parts = components_within(g, g.vertices() - cut);
      const VertexSet bad = from_list(*comp);
      bool listed = false;
      for (const auto& p : parts) listed = listed || p == bad;
      if (!listed) return false;
      if (r.id == ClaimId::kL2_6) {
        return parts.size() >= 2 && is_free(g, gen::pattern_k2_k1());
      }
      if (!is_connected(g) || !is_free(g, gen::pattern_k2_3k1()) || parts.size() < 3) return false;
      return parts.size() != 3 || contains_pattern_within(g, bad, gen::pattern_k2_k1());
    }
    case ClaimId::kL2_7: {
      if (!r.parameter || *r.parameter <= Rational(0) || n == 0) return false;
      const Rational share = Rational(n) / (*r.parameter + Rational(1));
      return is_free(g, gen::pattern_k2_k1()) &&
             Rational(independence_number(g).size) <= share &&
             Rational(g.min_degree()) < Rational(n) - share;
    }
    default: break;
  }

  // Cycle claims: the witness names the cycle and the component.
  auto c = witness_cycle(g, r);
  if (!c) return false;
  if (r.id == ClaimId::kC3) {
    return components_within(g, g.vertices() - c->vertex_set()).size() > 3;
  }
  auto h = witness_component(g, *c, r);
  if (!h) return false;
  const VertexSet att = g.neighborhood(*h) & c->vertex_set();
  switch (r.id) {
    case ClaimId::kC2a: {
      if (components_within(g, g.vertices() - att).size() < 2) return false;
      const auto tau = toughness_exact(g).value;
      return !tau.infinite && Rational(att.size()) < Rational(2) * tau.value;
    }
    case ClaimId::kC2b: {
      const int x = single(r, "x"), y = single(r, "y");
      return x >= 0 && y >= 0 && att.contains(x) && att.contains(y) && c->successor(x) == y;
    }
    case ClaimId::kC2c: {
      const int x = single(r, "x"), y = single(r, "y");
      return x >= 0 && y >= 0 && x != y && att.contains(x) && att.contains(y) &&
             c->successor(x) != y && c->successor(y) != x &&
             g.adjacent(c->successor(x), c->successor(y));
    }
    case ClaimId::kC2d: return h->size() > 1;
    case ClaimId::kC4a:
    case ClaimId::kC4b: {
      const int w = single(r, "w"), z = single(r, "z"), w1 = single(r, "w1");
      if (w < 0 || z < 0 || w1 < 0 || !c->contains(w1)) return false;
      if (!att.contains(w) || !att.contains(z) || w == z) return false;
      const int wp = c->successor(w), zp = c->successor(z);
      if (!g.adjacent(wp, w1) || w1 == w || w1 == z || w1 == wp || w1 == zp) return false;
      const bool before = r.id == ClaimId::kC4b;
      if (before != (c->forward_distance(w, w1) < c->forward_distance(w, z))) return false;
      return g.adjacent(zp, before ? c->predecessor(w1) : c->successor(w1));
    }
    default: return false;
  }
}

}  // namespace toughham
