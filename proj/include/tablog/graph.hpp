#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tablog/element_map.hpp"
#include "tablog/error.hpp"

namespace tablog {

using Vertex = std::size_t;

// Finite simple undirected graph. Each edge is stored once with its
// endpoints ordered by declaration index; edges keep first-seen order.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError on loops, duplicate names, unknown endpoints.
  // Repeated edges collapse to one.
  static Graph from_edges(std::vector<std::string> names,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex index_of(std::string_view name) const;

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  // Index into edges() of the edge uv, in either orientation.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::size_t, std::size_t> edge_lookup_;
};

bool is_connected(const Graph& g);

// Line format: `# comment`, `v NAME`, `e A B`.
Graph load_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Checks (HP) on every edge, (BP) for every u and every neighbor of g(u),
// and optionally surjectivity. Throws ValidationError if `g` is not a total
// map into V(H).
Verdict verify_lshom(const Graph& source, const Graph& target, std::span<const Vertex> g,
                     bool require_surjective);

// Backtracking search for a locally surjective homomorphism. Variables in
// descending degree, values in declaration order.
std::optional<ElementMap> lshom_brute(const Graph& source, const Graph& target,
                                      bool require_surjective);

}  // namespace tablog
