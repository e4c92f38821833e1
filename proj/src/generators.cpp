#include "toughham/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace toughham::gen {
namespace {

void require(bool ok, std::string_view what) {
  if (!ok) throw std::invalid_argument(std::string(what));
}

Graph edge_plus_isolated(int isolated) {
  return Graph(2 + isolated, {{0, 1}});
}

}  // namespace

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  for (int s : part_sizes) require(s >= 1, "multipartite parts need size >= 1");
  const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cocktail_party(int m) {
  require(m >= 1, "cocktail party needs m >= 1");
  return complete_multipartite(std::vector<int>(static_cast<std::size_t>(m), 2));
}

Graph star(int k) {
  require(k >= 1, "star needs k >= 1");
  GraphBuilder b(k + 1);
  for (int v = 1; v <= k; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph wheel(int k) {
  require(k >= 3, "wheel needs a rim of >= 3 vertices");
  GraphBuilder b(k + 1);
  for (int v = 0; v < k; ++v) {
    b.add_edge(v, (v + 1) % k);
    b.add_edge(v, k);
  }
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).build();
}

Graph pattern_k2_3k1() { return edge_plus_isolated(3); }
Graph pattern_k2_2k1() { return edge_plus_isolated(2); }
Graph pattern_k2_k1() { return edge_plus_isolated(1); }
Graph pattern_p4() { return path(4); }
Graph pattern_k1_p3() { return Graph(4, {{0, 1}, {1, 2}}); }

const std::vector<std::string>& pattern_names() {
  static const std::vector<std::string> names{"k2u3k1", "k2u2k1", "k2uk1", "p4", "k1up3"};
  return names;
}

Graph pattern(std::string_view name) {
  if (name == "k2u3k1") return pattern_k2_3k1();
  if (name == "k2u2k1") return pattern_k2_2k1();
  if (name == "k2uk1") return pattern_k2_k1();
  if (name == "p4") return pattern_p4();
  if (name == "k1up3") return pattern_k1_p3();
  throw std::invalid_argument("unknown pattern: " + std::string(name));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "complete", "cycle",    "path",   "empty",  "multipartite", "cocktail-party",
      "star",     "wheel",    "petersen", "k2u3k1", "k2u2k1",     "k2uk1",
      "p4",       "k1up3"};
  return names;
}

Graph family(std::string_view name, const std::vector<int>& params) {
  auto one = [&]() {
    require(params.size() == 1, std::string(name) + " takes exactly one parameter");
    return params[0];
  };
  auto none = [&]() { require(params.empty(), std::string(name) + " takes no parameters"); };
  if (name == "complete") return complete(one());
  if (name == "cycle") return cycle(one());
  if (name == "path") return path(one());
  if (name == "empty") return empty(one());
  if (name == "multipartite") {
    require(!params.empty(), "multipartite needs part sizes");
    return complete_multipartite(params);
  }
  if (name == "cocktail-party") return cocktail_party(one());
  if (name == "star") return star(one());
  if (name == "wheel") return wheel(one());
  if (name == "petersen") {
    none();
    return petersen();
  }
  for (const auto& p : pattern_names()) {
    if (name == p) {
      none();
      return pattern(name);
    }
  }
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

}  // namespace toughham::gen
