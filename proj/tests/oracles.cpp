#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oracle {

Matrix matrix(const toughham::Graph& g) {
  Matrix m;
  m.n = g.order();
  m.row.assign(static_cast<std::size_t>(m.n), 0);
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (g.adjacent(u, v)) m.row[u] |= Mask{1} << v;
  return m;
}

namespace {

Mask full(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

void dfs(const Matrix& m, int v, Mask alive, Mask& seen) {
  seen |= Mask{1} << v;
  for (int w = 0; w < m.n; ++w)
    if ((m.row[v] >> w & 1) && (alive >> w & 1) && !(seen >> w & 1)) dfs(m, w, alive, seen);
}

bool independent(const Matrix& m, Mask s) {
  for (int v = 0; v < m.n; ++v)
    if ((s >> v & 1) && (m.row[v] & s)) return false;
  return true;
}

bool reaches(const Matrix& m, Mask alive, Mask from, Mask to) {
  Mask seen = 0;
  for (int v = 0; v < m.n; ++v)
    if ((from & alive) >> v & 1 && !(seen >> v & 1)) dfs(m, v, alive, seen);
  return (seen & to & alive) != 0;
}

}  // namespace

int components(const Matrix& m, Mask alive) {
  Mask seen = 0;
  int count = 0;
  for (int v = 0; v < m.n; ++v) {
    if ((alive >> v & 1) && !(seen >> v & 1)) {
      ++count;
      dfs(m, v, alive, seen);
    }
  }
  return count;
}

bool connected(const Matrix& m) { return components(m, full(m.n)) <= 1; }

std::optional<toughham::Rational> toughness(const Matrix& m) {
  std::optional<toughham::Rational> best;
  for (Mask s = 0; s < full(m.n); ++s) {
    const int c = components(m, full(m.n) & ~s);
    if (c < 2) continue;
    toughham::Rational r(std::popcount(s), c);
    if (!best || r < *best) best = r;
  }
  return best;
}

int alpha(const Matrix& m) {
  int best = 0;
  for (Mask s = 0; s <= full(m.n) && m.n > 0; ++s) {
    if (independent(m, s)) best = std::max(best, std::popcount(s));
    if (s == full(m.n)) break;
  }
  return best;
}

int connectivity(const Matrix& m) {
  int best = std::max(0, m.n - 1);
  for (Mask s = 0; s < full(m.n); ++s) {
    if (std::popcount(s) >= best) continue;
    if (components(m, full(m.n) & ~s) >= 2) best = std::popcount(s);
  }
  return best;
}

bool hamiltonian(const Matrix& m) {
  if (m.n < 3) return false;
  std::vector<int> p(static_cast<std::size_t>(m.n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < m.n && ok; ++i) ok = m.row[p[i]] >> p[(i + 1) % m.n] & 1;
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

bool hamiltonian_path(const Matrix& m, int u, int v) {
  if (u == v) return m.n == 1;
  std::vector<int> rest;
  for (int w = 0; w < m.n; ++w)
    if (w != u && w != v) rest.push_back(w);
  do {
    std::vector<int> p{u};
    p.insert(p.end(), rest.begin(), rest.end());
    p.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = m.row[p[i]] >> p[i + 1] & 1;
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool hamiltonian_connected(const Matrix& m) {
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      if (!hamiltonian_path(m, u, v)) return false;
  return true;
}

int circumference(const Matrix& m) {
  // Held-Karp style: reach[s][mask] = set of ends of paths from s (the lowest
  // vertex) covering exactly mask.
  int best = 0;
  for (int s = 0; s < m.n; ++s) {
    std::vector<Mask> reach(std::size_t{1} << m.n, 0);
    reach[Mask{1} << s] = Mask{1} << s;
    for (Mask mask = 0; mask < (Mask{1} << m.n); ++mask) {
      if (!(mask >> s & 1) || (mask & ((Mask{1} << s) - 1)) || reach[mask] == 0) continue;
      for (int e = 0; e < m.n; ++e) {
        if (!(reach[mask] >> e & 1)) continue;
        if (std::popcount(mask) >= 3 && (m.row[e] >> s & 1)) best = std::max(best, std::popcount(mask));
        for (int w = 0; w < m.n; ++w)
          if ((m.row[e] >> w & 1) && !(mask >> w & 1) && w > s) reach[mask | Mask{1} << w] |= Mask{1} << w;
      }
    }
  }
  return best;
}

bool contains_induced(const Matrix& host, const Matrix& pattern) {
  const int k = pattern.n;
  if (k > host.n) return false;
  for (Mask s = 0;; ++s) {
    if (std::popcount(s) == k) {
      std::vector<int> pick;
      for (int v = 0; v < host.n; ++v)
        if (s >> v & 1) pick.push_back(v);
      do {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
          for (int b = 0; b < k && ok; ++b)
            if (a != b) ok = ((pattern.row[a] >> b) & 1) == ((host.row[pick[a]] >> pick[b]) & 1);
        if (ok) return true;
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    if (s == full(host.n)) break;
  }
  return false;
}

int min_separator(const Matrix& m, Mask x1, Mask x2) {
  int best = m.n;
  for (Mask s = 0; s <= full(m.n); ++s) {
    if (std::popcount(s) < best && !reaches(m, full(m.n) & ~s, x1, x2)) best = std::popcount(s);
    if (s == full(m.n)) break;
  }
  return best;
}

bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(static_cast<std::size_t>(a.n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int v = 0; v < a.n && ok; ++v) ok = ((a.row[u] >> v) & 1) == ((b.row[p[u]] >> p[v]) & 1);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::pair<long, long> class_counts(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const int bits = static_cast<int>(pairs.size());
  auto index_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < bits; ++i)
      if (pairs[i] == std::make_pair(a, b)) return i;
    return -1;
  };
  // Edge-index image under every permutation.
  std::vector<std::vector<int>> images;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> img(static_cast<std::size_t>(bits));
    for (int e = 0; e < bits; ++e) img[e] = index_of(p[pairs[e].first], p[pairs[e].second]);
    images.push_back(std::move(img));
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<bool> seen(std::size_t{1} << bits, false);
  long all = 0, conn = 0;
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << bits); ++code) {
    if (seen[code]) continue;
    ++all;
    Matrix m;
    m.n = n;
    m.row.assign(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < bits; ++e) {
      if (code >> e & 1) {
        m.row[pairs[e].first] |= Mask{1} << pairs[e].second;
        m.row[pairs[e].second] |= Mask{1} << pairs[e].first;
      }
    }
    if (connected(m)) ++conn;
    for (const auto& img : images) {
      std::uint32_t out = 0;
      for (int e = 0; e < bits; ++e)
        if (code >> e & 1) out |= std::uint32_t{1} << img[e];
      seen[out] = true;
    }
  }
  return {all, conn};
}

}  // namespace oracle
