#include "tablog/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lines.hpp"
#include "tablog/error.hpp"

namespace tablog {

Poset Poset::from_relation(std::vector<std::string> names,
                           std::span<const std::pair<Element, Element>> less_than) {
  Poset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  for (Element i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.names_[i], i).second) {
      throw ValidationError("duplicate element '" + p.names_[i] + "'");
    }
  }

  std::vector<std::vector<Element>> succ(n);
  for (auto [a, b] : less_than) {
    if (a >= n || b >= n) throw ValidationError("relation references an undeclared element");
    if (a == b) throw CycleError("cycle: '" + p.names_[a] + "' < '" + p.names_[a] + "'");
    succ[a].push_back(b);
  }

  // Kahn's algorithm on the reversed graph: sinks (maximal elements) first.
  std::vector<std::size_t> out_degree(n);
  std::vector<std::vector<Element>> pred(n);
  for (Element a = 0; a < n; ++a) {
    std::sort(succ[a].begin(), succ[a].end());
    succ[a].erase(std::unique(succ[a].begin(), succ[a].end()), succ[a].end());
    out_degree[a] = succ[a].size();
    for (Element b : succ[a]) pred[b].push_back(a);
  }
  std::vector<Element> order;
  order.reserve(n);
  for (Element a = 0; a < n; ++a) {
    if (out_degree[a] == 0) order.push_back(a);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Element a : pred[order[head]]) {
      if (--out_degree[a] == 0) order.push_back(a);
    }
  }
  if (order.size() != n) {
    for (Element a = 0; a < n; ++a) {
      if (out_degree[a] != 0) throw CycleError("cycle through element '" + p.names_[a] + "'");
    }
  }

  p.up_.assign(n, ElementSet(n));
  for (Element a : order) {
    p.up_[a].set(a);
    for (Element b : succ[a]) p.up_[a] |= p.up_[b];
  }

  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  p.down_.assign(n, ElementSet(n));
  for (Element a = 0; a < n; ++a) {
    ElementSet strict = p.up_[a];
    strict.reset(a);
    ElementSet indirect(n);
    for (auto c = strict.find_first(); c != ElementSet::npos; c = strict.find_next(c)) {
      ElementSet above = p.up_[c];
      above.reset(c);
      indirect |= above;
    }
    ElementSet cover = strict - indirect;
    for (auto b = cover.find_first(); b != ElementSet::npos; b = cover.find_next(b)) {
      p.upper_[a].push_back(b);
      p.lower_[b].push_back(a);
    }
    for (auto b = p.up_[a].find_first(); b != ElementSet::npos; b = p.up_[a].find_next(b)) {
      p.down_[b].set(a);
    }
  }

  p.depth_.assign(n, 1);
  for (Element a : order) {
    for (Element b : p.upper_[a]) p.depth_[a] = std::max(p.depth_[a], p.depth_[b] + 1);
  }
  p.top_down_ = std::move(order);
  return p;
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownElementError("unknown element '" + std::string(name) + "'");
}

void Poset::check_element(Element x) const {
  if (x >= size()) throw UnknownElementError("element index " + std::to_string(x) + " out of range");
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size(); ++a) {
    for (Element b : upper_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t n = 0;
  for (const auto& u : upper_) n += u.size();
  return n;
}

std::size_t Poset::depth() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

bool ElementSubset::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<std::string> ElementSubset::names() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (Element x : members) out.push_back(parent->name(x));
  return out;
}

ElementSubset subset_of(const Poset& p, const ElementSet& bits) {
  ElementSubset s{&p, {}};
  for (auto x = bits.find_first(); x != ElementSet::npos; x = bits.find_next(x)) {
    s.members.push_back(x);
  }
  return s;
}

ElementSubset upset(const Poset& p, Element x) {
  p.check_element(x);
  return subset_of(p, p.up(x));
}

ElementSubset downset(const Poset& p, Element x) {
  p.check_element(x);
  return subset_of(p, p.down(x));
}

ElementSubset isucc(const Poset& p, Element x) {
  p.check_element(x);
  auto c = p.upper_covers(x);
  return {&p, {c.begin(), c.end()}};
}

ElementSubset minimal_elements(const Poset& p) {
  ElementSubset s{&p, {}};
  for (Element x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).empty()) s.members.push_back(x);
  }
  return s;
}

ElementSubset maximal_elements(const Poset& p) {
  ElementSubset s{&p, {}};
  for (Element x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).empty()) s.members.push_back(x);
  }
  return s;
}

std::optional<Element> root_of(const Poset& p) {
  auto mins = minimal_elements(p);
  if (mins.size() != 1) return std::nullopt;
  // A finite poset with a single minimal element has it below everything.
  return mins.members.front();
}

bool is_rooted(const Poset& p) { return root_of(p).has_value(); }

bool is_chain(const Poset& p, const ElementSubset& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      Element a = s.members[i], b = s.members[j];
      if (!p.leq(a, b) && !p.leq(b, a)) return false;
    }
  }
  return true;
}

bool is_tree(const Poset& p) {
  if (!is_rooted(p)) return false;
  // Every principal downset is a chain iff every element has at most one
  // lower cover.
  for (Element x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).size() > 1) return false;
  }
  return true;
}

Subposet induced(const Poset& p, const ElementSubset& s) {
  std::vector<Element> local(p.size(), p.size());
  std::vector<std::string> names;
  names.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    local[s.members[i]] = i;
    names.push_back(p.name(s.members[i]));
  }
  std::vector<std::pair<Element, Element>> rel;
  for (Element a : s.members) {
    for (Element b : s.members) {
      if (p.less(a, b)) rel.emplace_back(local[a], local[b]);
    }
  }
  return {Poset::from_relation(std::move(names), rel), s.members};
}

Subposet induced_upset(const Poset& p, Element x) { return induced(p, upset(p, x)); }

Poset load_poset(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Element> index;
  std::vector<std::pair<Element, Element>> rel;
  auto lookup = [&](const detail::Line& line, std::string_view name) {
    auto it = index.find(std::string(name));
    if (it == index.end()) {
      throw ParseError(line.number, "undeclared element '" + std::string(name) + "'");
    }
    return it->second;
  };
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "el" && tok.size() == 2) {
      std::string name(tok[1]);
      if (!index.emplace(name, names.size()).second) {
        throw ParseError(line.number, "duplicate element '" + name + "'");
      }
      names.push_back(std::move(name));
    } else if (tok[0] == "lt" && tok.size() == 3) {
      rel.emplace_back(lookup(line, tok[1]), lookup(line, tok[2]));
    } else {
      throw ParseError(line.number, "expected `el NAME` or `lt A B`");
    }
  }
  return Poset::from_relation(std::move(names), rel);
}

std::string write_poset(const Poset& p) {
  std::ostringstream out;
  for (const auto& n : p.names()) out << "el " << n << '\n';
  std::vector<std::pair<std::string, std::string>> lines;
  for (auto [a, b] : p.covers()) lines.emplace_back(p.name(a), p.name(b));
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) out << "lt " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace tablog
