#include "tablog/pathdecomp.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "lines.hpp"

namespace tablog {

std::size_t decomposition_width(const PathDecomposition& d) {
  std::size_t widest = 0;
  for (const auto& bag : d.bags) widest = std::max(widest, bag.size());
  return widest == 0 ? 0 : widest - 1;
}

Verdict validate_decomposition(const Graph& g, const PathDecomposition& d) {
  const std::size_t n = g.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(n, none), last(n, none), count(n, 0);
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    for (std::size_t v : d.bags[i]) {
      if (v >= n) return Verdict::reject("bag " + std::to_string(i) + " holds an unknown vertex");
      if (first[v] == none) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (first[v] == none) return Verdict::reject("vertex " + g.name(v) + " is in no bag");
    if (last[v] - first[v] + 1 != count[v]) {
      return Verdict::reject("bags holding " + g.name(v) + " are not consecutive");
    }
  }
  for (auto [u, v] : g.edges()) {
    // Both intervals are consecutive, so they share a bag iff they overlap.
    if (std::max(first[u], first[v]) > std::min(last[u], last[v])) {
      return Verdict::reject("edge " + g.name(u) + "-" + g.name(v) + " is in no bag");
    }
  }
  return Verdict::accept();
}

Graph cover_graph(const Poset& p) {
  return Graph::from_edges(p.names(), p.covers());
}

PathDecomposition load_decomposition(std::string_view text, std::span<const std::string> names) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  PathDecomposition d;
  for (const auto& line : detail::tokenize_lines(text)) {
    if (line.tokens[0] != "bag") throw ParseError(line.number, "expected `bag NAME ...`");
    std::vector<std::size_t> bag;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      auto it = index.find(line.tokens[i]);
      if (it == index.end()) {
        throw ParseError(line.number, "unknown vertex '" + std::string(line.tokens[i]) + "'");
      }
      bag.push_back(it->second);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    d.bags.push_back(std::move(bag));
  }
  return d;
}

std::string write_decomposition(const PathDecomposition& d, std::span<const std::string> names) {
  std::ostringstream out;
  for (const auto& bag : d.bags) {
    out << "bag";
    for (std::size_t v : bag) out << ' ' << names[v];
    out << '\n';
  }
  return out.str();
}

}  // namespace tablog
