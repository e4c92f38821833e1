#include "toughham/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>

#include "toughham/generators.hpp"
#include "toughham/hamilton.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

namespace toughham {
namespace {

constexpr int kMax = kMaxEnumerationOrder;
// Levels up to this order stay cached between calls.
constexpr int kCachedOrder = 9;

using Rows = std::array<std::uint32_t, kMax>;

class Canonizer {
 public:
  Canonizer(int n, const Rows& adj) : n_(n), adj_(adj) {
    for (int v = 0; v < n_; ++v) degree_[v] = std::popcount(adj_[v]);
    std::copy_n(degree_.begin(), n_, sorted_.begin());
    std::sort(sorted_.begin(), sorted_.begin() + n_);
    col_[0].fill(0);
  }

  std::uint64_t run() {
    search(0, 0);
    std::uint64_t code = 0;
    for (int k = 1; k < n_; ++k) code = (code << k) | best_[k];
    return code;
  }

 private:
  bool twins(int a, int b) const {
    return (adj_[a] & ~(1u << b)) == (adj_[b] & ~(1u << a));
  }

  void search(int k, std::uint32_t used) {
    if (k == n_) {
      if (!have_ || std::lexicographical_compare(cur_.begin() + 1, cur_.begin() + n_,
                                                 best_.begin() + 1, best_.begin() + n_)) {
        best_ = cur_;
        have_ = true;
      }
      return;
    }
    const auto& col = col_[k];
    std::uint32_t min_col = UINT32_MAX;
    std::array<int, kMax> cand{};
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v & 1u) || degree_[v] != sorted_[k]) continue;
      if (col[v] < min_col) {
        min_col = col[v];
        count = 0;
      }
      if (col[v] == min_col) cand[count++] = v;
    }
    if (have_) {
      // cur_ never exceeds best_ on a visited prefix, so equality decides.
      if ((k <= 1 || std::equal(cur_.begin() + 1, cur_.begin() + k, best_.begin() + 1)) &&
          min_col > best_[k]) {
        return;
      }
    }
    cur_[k] = min_col;
    std::array<int, kMax> reps{};
    int nreps = 0;
    for (int i = 0; i < count; ++i) {
      const int v = cand[i];
      bool dup = false;
      for (int j = 0; j < nreps && !dup; ++j) dup = twins(reps[j], v);
      if (dup) continue;
      reps[nreps++] = v;
      auto& next = col_[k + 1];
      for (int u = 0; u < n_; ++u) next[u] = (col[u] << 1) | (adj_[v] >> u & 1u);
      search(k + 1, used | (1u << v));
    }
  }

  int n_;
  Rows adj_;
  std::array<int, kMax> degree_{};
  std::array<int, kMax> sorted_{};
  std::array<std::uint32_t, kMax> cur_{};
  std::array<std::uint32_t, kMax> best_{};
  bool have_ = false;
  std::array<std::array<std::uint32_t, kMax>, kMax + 1> col_{};
};

Rows rows_from_code(int n, std::uint64_t code) {
  Rows rows{};
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (code >> --bit & 1u) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
    }
  }
  return rows;
}

void check_order(int n) {
  if (n < 1 || n > kMax) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMax));
  }
}

std::vector<std::uint64_t> extend_level(int n, const std::vector<std::uint64_t>& prev) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> chunk;
  constexpr std::size_t kChunk = std::size_t{1} << 24;
  auto flush = [&] {
    std::sort(chunk.begin(), chunk.end());
    chunk.erase(std::unique(chunk.begin(), chunk.end()), chunk.end());
    std::vector<std::uint64_t> merged;
    merged.reserve(out.size() + chunk.size());
    std::set_union(out.begin(), out.end(), chunk.begin(), chunk.end(), std::back_inserter(merged));
    out.swap(merged);
    chunk.clear();
  };
  for (std::uint64_t code : prev) {
    Rows base = rows_from_code(n - 1, code);
    for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
      Rows rows = base;
      rows[n - 1] = s;
      for (std::uint32_t m = s; m != 0; m &= m - 1) rows[std::countr_zero(m)] |= 1u << (n - 1);
      chunk.push_back(Canonizer(n, rows).run());
    }
    if (chunk.size() >= kChunk) flush();
  }
  flush();
  return out;
}

std::vector<std::uint64_t> level(int n) {
  static std::mutex mu;
  static std::vector<std::vector<std::uint64_t>> cache{{}, {0}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= std::min(n, kCachedOrder)) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(extend_level(m, cache.back()));
  }
  if (n <= kCachedOrder) return cache[n];
  std::vector<std::uint64_t> cur = cache.back();
  for (int m = kCachedOrder + 1; m <= n; ++m) cur = extend_level(m, cur);
  return cur;
}

bool connected_rows(int n, const Rows& rows) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1) next |= rows[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return n == 0 || seen == (n == 32 ? UINT32_MAX : (1u << n) - 1);
}

constexpr std::string_view kFreeSuffix = "-free";
constexpr std::string_view kToughSuffix = "-tough";

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  check_order(n);
  Rows rows{};
  for (int v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.neighbors(v).words()[0]);
  return Canonizer(n, rows).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  check_order(n);
  Rows rows = rows_from_code(n, code);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (std::uint32_t m = rows[u] >> (u + 1); m != 0; m &= m - 1) {
      b.add_edge(u, u + 1 + std::countr_zero(m));
    }
  }
  return std::move(b).build();
}

void validate_filter(std::string_view filter) {
  if (filter == "connected" || filter == "hamiltonian" || filter == "non-hamiltonian") return;
  if (ends_with(filter, kFreeSuffix)) {
    const auto name = filter.substr(0, filter.size() - kFreeSuffix.size());
    const auto& names = gen::pattern_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) return;
  }
  if (ends_with(filter, kToughSuffix)) {
    const Rational t = Rational::parse(filter.substr(0, filter.size() - kToughSuffix.size()));
    if (t >= Rational(0)) return;
  }
  throw std::invalid_argument("unknown filter: " + std::string(filter));
}

bool passes_filter(const Graph& g, std::string_view filter) {
  validate_filter(filter);
  if (filter == "connected") return is_connected(g);
  if (filter == "hamiltonian") return is_hamiltonian(g);
  if (filter == "non-hamiltonian") return !is_hamiltonian(g);
  if (ends_with(filter, kFreeSuffix)) {
    return is_free(g, gen::pattern(filter.substr(0, filter.size() - kFreeSuffix.size())));
  }
  return is_t_tough(g, Rational::parse(filter.substr(0, filter.size() - kToughSuffix.size()))).tough;
}

std::vector<std::string> filter_names() {
  std::vector<std::string> out{"connected"};
  for (const auto& p : gen::pattern_names()) out.push_back(p + std::string(kFreeSuffix));
  out.push_back("<t>-tough");
  out.push_back("hamiltonian");
  out.push_back("non-hamiltonian");
  return out;
}

void enumerate_graphs(const EnumerationSpec& spec, const std::function<bool(const Graph&)>& fn) {
  check_order(spec.n);
  for (const auto& f : spec.filters) validate_filter(f);
  for (std::uint64_t code : level(spec.n)) {
    if (spec.connected_only && !connected_rows(spec.n, rows_from_code(spec.n, code))) continue;
    Graph g = graph_from_code(spec.n, code);
    bool keep = true;
    for (const auto& f : spec.filters) {
      if (!passes_filter(g, f)) {
        keep = false;
        break;
      }
    }
    if (keep && !fn(g)) return;
  }
}

std::vector<Graph> enumerate_all(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  enumerate_graphs(spec, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
  if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("p must lie in [0, 1]");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::mt19937_64 rng(seed);
  const unsigned __int128 threshold = static_cast<unsigned __int128>(p.num()) << 64;
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const unsigned __int128 x = rng();
      if (x * static_cast<unsigned __int128>(p.den()) < threshold) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace toughham
