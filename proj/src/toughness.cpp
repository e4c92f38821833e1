#include "toughham/toughness.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toughham/structure.hpp"

namespace toughham {
namespace {

// Visits the k-subsets of {0..n-1} in lexicographic order until fn returns
// false.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  VertexSet s;
  for (int v : idx) s.insert(v);
  while (true) {
    if (!fn(s)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    s.erase(idx[i]);
    ++idx[i];
    s.insert(idx[i]);
    for (int j = i + 1; j < k; ++j) {
      s.erase(idx[j]);
      idx[j] = idx[j - 1] + 1;
      s.insert(idx[j]);
    }
  }
}

// Upper bound on c(G - S) for |S| = k.
int max_parts(int n, int k, int alpha) { return std::min(n - k, alpha); }

}  // namespace

ToughnessResult toughness_exact(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return {ToughnessValue::infinity(), std::nullopt};
  if (!is_connected(g)) return {ToughnessValue{false, Rational(0)}, VertexSet()};

  const VertexSet all = g.vertices();
  const int alpha = independence_number(g).size;
  const int kappa = vertex_connectivity(g);
  std::optional<Rational> best;
  VertexSet witness;
  for (int k = kappa; k <= n - 2; ++k) {
    const int parts_cap = max_parts(n, k, alpha);
    if (parts_cap < 2) break;
    // Ratios at this size (and beyond) are at least k / parts_cap.
    if (best && Rational(k, parts_cap) >= *best) break;
    for_each_subset(n, k, [&](const VertexSet& s) {
      const int c = component_count(g, all - s);
      if (c >= 2) {
        Rational r(k, c);
        if (!best || r < *best) {
          best = r;
          witness = s;
        }
      }
      return true;
    });
  }
  return {ToughnessValue{false, *best}, witness};
}

ToughnessDecision is_t_tough(const Graph& g, const Rational& t) {
  if (t < Rational(0)) throw std::invalid_argument("toughness threshold must be >= 0");
  if (t == Rational(0) || g.is_complete()) return {};
  const int n = g.order();
  const VertexSet all = g.vertices();
  if (!is_connected(g)) return {false, VertexSet()};

  const int alpha = independence_number(g).size;
  const int kappa = vertex_connectivity(g);
  ToughnessDecision out;
  for (int k = kappa; k <= n - 2; ++k) {
    // A violation needs t * c > k with c <= parts_cap.
    if (t * Rational(max_parts(n, k, alpha)) <= Rational(k)) break;
    for_each_subset(n, k, [&](const VertexSet& s) {
      const int c = component_count(g, all - s);
      if (c >= 2 && t * Rational(c) > Rational(k)) {
        out = {false, s};
        return false;
      }
      return true;
    });
    if (!out.tough) break;
  }
  return out;
}

VertexSet tough_set(const Graph& g) {
  if (g.is_complete()) throw std::invalid_argument("tough set undefined for complete graphs");
  if (!is_connected(g)) throw std::invalid_argument("tough set undefined for disconnected graphs");
  return *toughness_exact(g).witness;
}

}  // namespace toughham
