#pragma once

// Fixture builders, random generators and enumeration oracles shared by
// the unit and acceptance suites. Oracles here use only leq/adjacent and
// never call into the search or verification code they check.

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tablog/graph.hpp"
#include "tablog/poset.hpp"

namespace tablog::testing {

inline std::string data_path(const std::string& name) {
  return std::string(TABLOG_TEST_DATA) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Poset make_poset(std::size_t n, const std::vector<std::pair<Element, Element>>& lt,
                        const std::string& prefix = "p") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Poset::from_relation(std::move(names), lt);
}

inline Poset chain(std::size_t n, const std::string& prefix = "c") {
  std::vector<std::pair<Element, Element>> lt;
  for (std::size_t i = 0; i + 1 < n; ++i) lt.emplace_back(i, i + 1);
  return make_poset(n, lt, prefix);
}

inline Poset antichain(std::size_t n, const std::string& prefix = "a") { return make_poset(n, {}, prefix); }

inline Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Graph::from_edges(std::move(names), edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

// Every labeled simple graph on n vertices.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) e.push_back(slots[k]);
    out.push_back(make_graph(n, e));
  }
  return out;
}

// Random order on n elements: i < j is generated with probability p for i < j.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double p, const std::string& prefix = "p") {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Element, Element>> lt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) lt.emplace_back(i, j);
  // Shuffle names so declaration order is not a linear extension.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : lt) {
    a = perm[a];
    b = perm[b];
  }
  return make_poset(n, lt, prefix);
}

// Random order with element 0 below everything else.
inline Poset random_rooted_poset(std::mt19937& rng, std::size_t n, double p,
                                 const std::string& prefix = "q") {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Element, Element>> lt;
  for (std::size_t j = 1; j < n; ++j) lt.emplace_back(0, j);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) lt.emplace_back(i, j);
  return make_poset(n, lt, prefix);
}

// Random tree: element i > 0 has a uniformly chosen parent among 0..i-1.
inline Poset random_tree(std::mt19937& rng, std::size_t n, const std::string& prefix = "t") {
  std::vector<std::pair<Element, Element>> lt;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    lt.emplace_back(parent(rng), i);
  }
  return make_poset(n, lt, prefix);
}

// Calls f on every map [0,n) -> [0,m) until it returns true.
inline bool for_each_map(std::size_t n, std::size_t m,
                         const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (m == 0) return n == 0 && f({});
  std::vector<std::size_t> h(n, 0);
  while (true) {
    if (f(h)) return true;
    std::size_t i = 0;
    while (i < n && ++h[i] == m) h[i++] = 0;
    if (i == n) return false;
  }
}

inline bool naive_is_pmorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& h,
                               bool surjective) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !q.leq(h[x], h[y])) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < q.size(); ++y) {
      if (!q.leq(h[x], y)) continue;
      bool found = false;
      for (Element z = 0; z < p.size() && !found; ++z) found = p.leq(x, z) && h[z] == y;
      if (!found) return false;
    }
  if (surjective) {
    for (Element y = 0; y < q.size(); ++y)
      if (std::find(h.begin(), h.end(), y) == h.end()) return false;
  }
  return true;
}

inline bool naive_spmorph(const Poset& p, const Poset& q) {
  return for_each_map(p.size(), q.size(),
                      [&](const auto& h) { return naive_is_pmorphism(p, q, h, true); });
}

inline bool naive_is_lshom(const Graph& g, const Graph& h, const std::vector<std::size_t>& m,
                           bool surjective) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v) && !h.adjacent(m[u], m[v])) return false;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex w = 0; w < h.size(); ++w) {
      if (!h.adjacent(m[u], w)) continue;
      bool found = false;
      for (Vertex v = 0; v < g.size() && !found; ++v) found = g.adjacent(u, v) && m[v] == w;
      if (!found) return false;
    }
  if (surjective) {
    for (Vertex w = 0; w < h.size(); ++w)
      if (std::find(m.begin(), m.end(), w) == m.end()) return false;
  }
  return true;
}

inline bool naive_lshom(const Graph& g, const Graph& h, bool surjective) {
  return for_each_map(g.size(), h.size(),
                      [&](const auto& m) { return naive_is_lshom(g, h, m, surjective); });
}

}  // namespace tablog::testing
