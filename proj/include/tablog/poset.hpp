#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tablog {

// Index of an element in declaration order.
using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;

// Finite poset. Immutable once built; the order is stored both as the
// cover relation and as its reflexive-transitive closure.
class Poset {
 public:
  Poset() = default;

  // Order generated by `less_than` over `names`. Pairs need not be covers.
  // Throws CycleError if the pairs induce a cycle (including a < a) and
  // ValidationError on duplicate names or out-of-range indices.
  static Poset from_relation(std::vector<std::string> names,
                             std::span<const std::pair<Element, Element>> less_than);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  // Throws UnknownElementError.
  Element index_of(std::string_view name) const;

  bool leq(Element a, Element b) const { return up_[a].test(b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }

  // Reflexive upset / downset as bitsets over the carrier.
  const ElementSet& up(Element x) const { return up_[x]; }
  const ElementSet& down(Element x) const { return down_[x]; }
  std::size_t upset_size(Element x) const { return up_[x].count(); }

  // Immediate successors / predecessors, ascending.
  std::span<const Element> upper_covers(Element x) const { return upper_[x]; }
  std::span<const Element> lower_covers(Element x) const { return lower_[x]; }
  // All cover pairs (a, b), a before b, ordered by a then b.
  std::vector<std::pair<Element, Element>> covers() const;
  std::size_t cover_count() const;

  // Cardinality of the longest chain in the upset of x.
  std::size_t depth(Element x) const { return depth_[x]; }
  // Maximum element depth; 0 for the empty poset.
  std::size_t depth() const;

  // Elements ordered so that every element precedes all its predecessors
  // (maximal elements first).
  const std::vector<Element>& top_down_order() const { return top_down_; }

  void check_element(Element x) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::size_t> depth_;
  std::vector<Element> top_down_;
};

// A subset of a poset's carrier. Members ascend in declaration order.
struct ElementSubset {
  const Poset* parent = nullptr;
  std::vector<Element> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Element x) const;
  std::vector<std::string> names() const;
};

// Induced subposet together with the embedding back into its parent.
// Element names are inherited from the parent.
struct Subposet {
  Poset poset;
  std::vector<Element> to_parent;
};

ElementSubset upset(const Poset& p, Element x);
ElementSubset downset(const Poset& p, Element x);
ElementSubset isucc(const Poset& p, Element x);
ElementSubset minimal_elements(const Poset& p);
ElementSubset maximal_elements(const Poset& p);
ElementSubset subset_of(const Poset& p, const ElementSet& bits);

std::optional<Element> root_of(const Poset& p);
bool is_rooted(const Poset& p);
// Rooted and every principal downset is a chain.
bool is_tree(const Poset& p);
bool is_chain(const Poset& p, const ElementSubset& s);

Subposet induced(const Poset& p, const ElementSubset& s);
Subposet induced_upset(const Poset& p, Element x);

// Line format: `# comment`, `el NAME`, `lt A B`.
Poset load_poset(std::string_view text);
// `el` lines in declaration order, then `lt` lines for covers sorted by name.
std::string write_poset(const Poset& p);

}  // namespace tablog
