#include "tablog/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lines.hpp"

namespace tablog {

namespace {

std::size_t edge_key(Vertex u, Vertex v, std::size_t n) {
  if (u > v) std::swap(u, v);
  return u * n + v;
}

}  // namespace

Graph Graph::from_edges(std::vector<std::string> names,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  const std::size_t n = names.size();
  g.names_ = std::move(names);
  for (Vertex i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.names_[i], i).second) {
      throw ValidationError("duplicate vertex '" + g.names_[i] + "'");
    }
  }
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ValidationError("edge references an undeclared vertex");
    if (u == v) throw ValidationError("loop at vertex '" + g.names_[u] + "'");
    if (u > v) std::swap(u, v);
    if (!g.edge_lookup_.emplace(edge_key(u, v, n), g.edges_.size()).second) continue;
    g.edges_.emplace_back(u, v);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownElementError("unknown vertex '" + std::string(name) + "'");
}

std::size_t Graph::max_degree() const {
  std::size_t k = 0;
  for (const auto& a : adj_) k = std::max(k, a.size());
  return k;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v || u >= size() || v >= size()) return std::nullopt;
  auto it = edge_lookup_.find(edge_key(u, v, size()));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.size();
}

Graph load_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto lookup = [&](const detail::Line& line, std::string_view name) {
    auto it = index.find(std::string(name));
    if (it == index.end()) {
      throw ParseError(line.number, "undeclared vertex '" + std::string(name) + "'");
    }
    return it->second;
  };
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "v" && tok.size() == 2) {
      std::string name(tok[1]);
      if (!index.emplace(name, names.size()).second) {
        throw ParseError(line.number, "duplicate vertex '" + name + "'");
      }
      names.push_back(std::move(name));
    } else if (tok[0] == "e" && tok.size() == 3) {
      Vertex u = lookup(line, tok[1]);
      Vertex v = lookup(line, tok[2]);
      if (u == v) throw ParseError(line.number, "loop at vertex '" + std::string(tok[1]) + "'");
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line.number, "expected `v NAME` or `e A B`");
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& n : g.names()) out << "v " << n << '\n';
  for (auto [u, v] : g.edges()) out << "e " << g.name(u) << ' ' << g.name(v) << '\n';
  return out.str();
}

Verdict verify_lshom(const Graph& source, const Graph& target, std::span<const Vertex> g,
                     bool require_surjective) {
  if (g.size() != source.size()) throw ValidationError("vertex map is not total");
  for (Vertex x : g) {
    if (x >= target.size()) throw ValidationError("vertex map leaves the target graph");
  }
  for (auto [u, v] : source.edges()) {
    if (!target.adjacent(g[u], g[v])) {
      return Verdict::reject("(HP) fails on edge " + source.name(u) + "-" + source.name(v) + ": " +
                             target.name(g[u]) + "-" + target.name(g[v]) + " is not an edge");
    }
  }
  for (Vertex u = 0; u < source.size(); ++u) {
    for (Vertex w : target.neighbors(g[u])) {
      auto nb = source.neighbors(u);
      bool hit = std::any_of(nb.begin(), nb.end(), [&](Vertex v) { return g[v] == w; });
      if (!hit) {
        return Verdict::reject("(BP) fails at (" + source.name(u) + ", " + target.name(w) +
                               "): no neighbor of " + source.name(u) + " maps to " + target.name(w));
      }
    }
  }
  if (require_surjective) {
    std::vector<bool> hit(target.size(), false);
    for (Vertex x : g) hit[x] = true;
    for (Vertex w = 0; w < target.size(); ++w) {
      if (!hit[w]) return Verdict::reject("not surjective: " + target.name(w) + " has no preimage");
    }
  }
  return Verdict::accept();
}

namespace {

class LshomSearch {
 public:
  LshomSearch(const Graph& g, const Graph& h, bool surjective)
      : g_(g), h_(h), surjective_(surjective), image_(g.size(), kUnassigned),
        hits_(h.size(), 0), order_(g.size()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
  }

  std::optional<ElementMap> run() {
    if (g_.empty()) {
      if (surjective_ && !h_.empty()) return std::nullopt;
      return ElementMap{};
    }
    if (h_.empty()) return std::nullopt;
    if (surjective_ && h_.size() > g_.size()) return std::nullopt;
    if (assign(0)) return image_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnassigned = static_cast<Vertex>(-1);

  // (BP) can still be met at u: distinct images already among u's
  // neighbors plus the unassigned neighbors cover N(g(u)).
  bool coverable(Vertex u) const {
    std::size_t needed = 0, free = 0;
    for (Vertex w : h_.neighbors(image_[u])) {
      auto nb = g_.neighbors(u);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex v) { return image_[v] == w; })) ++needed;
    }
    for (Vertex v : g_.neighbors(u)) {
      if (image_[v] == kUnassigned) ++free;
    }
    return needed <= free;
  }

  bool consistent(Vertex u) const {
    for (Vertex v : g_.neighbors(u)) {
      if (image_[v] == kUnassigned) continue;
      if (!h_.adjacent(image_[u], image_[v])) return false;
      if (!coverable(v)) return false;
    }
    return coverable(u);
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) {
      return !surjective_ || missing_ == 0;
    }
    Vertex u = order_[depth];
    for (Vertex w = 0; w < h_.size(); ++w) {
      if (h_.degree(w) > g_.degree(u)) continue;
      image_[u] = w;
      if (hits_[w]++ == 0) --missing_;
      bool ok = consistent(u);
      if (ok && surjective_) ok = missing_ <= order_.size() - depth - 1;
      if (ok && assign(depth + 1)) return true;
      if (--hits_[w] == 0) ++missing_;
      image_[u] = kUnassigned;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool surjective_;
  ElementMap image_;
  std::vector<std::size_t> hits_;
  std::size_t missing_ = h_.size();
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<ElementMap> lshom_brute(const Graph& source, const Graph& target,
                                      bool require_surjective) {
  return LshomSearch(source, target, require_surjective).run();
}

}  // namespace tablog
