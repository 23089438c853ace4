#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tablog/logcontain.hpp"
#include "tablog/morphism.hpp"
#include "tablog/poset.hpp"

namespace tablog {

// Bipartite graph between isucc(t) in the tree (left) and isucc(q) in the
// target (right); s-p is an edge when p is in Q_s.
struct MatchInstance {
  std::vector<Element> left;
  std::vector<Element> right;
  std::vector<std::vector<std::size_t>> adjacency;  // left position -> right positions
};

using ElementPairs = std::vector<std::pair<Element, Element>>;

// A matching of size |right| as (left element, right element) pairs in
// right order, or nullopt if none exists.
std::optional<ElementPairs> saturating_matching(const MatchInstance& m);

// Why q belongs to Q_t.
struct LeafCertificate {};                    // t and q both maximal
struct InheritedCertificate {                 // q in Q_s for this s in isucc(t)
  Element successor;
};
struct MatchedCertificate {                   // saturating matching of G_{t,q}
  ElementPairs pairs;
};
using Certificate = std::variant<LeafCertificate, InheritedCertificate, MatchedCertificate>;

// Q_t = { q : a surjective p-morphism up(t) -> up(q) exists }, for every
// element t of a tree T.
class QtTable {
 public:
  const Poset& tree() const { return tree_; }
  const Poset& target() const { return target_; }

  bool contains(Element t, Element q) const { return sets_[t].test(q); }
  const ElementSet& set(Element t) const { return sets_[t]; }
  std::vector<Element> members(Element t) const { return subset_of(target_, sets_[t]).members; }
  // Throws ValidationError if q is not in Q_t.
  const Certificate& certificate(Element t, Element q) const;

 private:
  friend QtTable compute_qt(const Poset&, const Poset&);

  Poset tree_;
  Poset target_;
  std::vector<ElementSet> sets_;
  std::vector<std::vector<std::optional<Certificate>>> certificates_;
};

// Fills the whole table bottom-up, leaves first. Throws ValidationError if
// `tree` is not a tree or `target` is empty.
QtTable compute_qt(const Poset& tree, const Poset& target);

// Surjective p-morphism up(t) -> up(q) assembled from the certificates.
// Throws ValidationError if q is not in Q_t.
UpsetMorphism reconstruct_witness(const QtTable& table, Element t, Element q);

// SPMorph for a tree source. No when the target is not rooted; otherwise
// Yes iff root(Q) is in Q_root(T). The witness is verified before return.
std::optional<ElementMap> tree_spmorph(const Poset& tree, const Poset& target);

// LogContain for a tree source: every minimal y of the target must lie in
// Q_root(T). Witnesses map the whole tree onto up(y).
LogContainResult tree_logcontain(const Poset& tree, const Poset& target);

// `qt ELEMENT : q1 q2 ...` per tree element in declaration order.
std::string dump_qt(const QtTable& table);

}  // namespace tablog
