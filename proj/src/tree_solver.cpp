#include "tablog/tree_solver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tablog/matching.hpp"

namespace tablog {

std::optional<ElementPairs> saturating_matching(const MatchInstance& m) {
  if (m.left.size() < m.right.size()) return std::nullopt;
  auto mate = maximum_bipartite_matching(m.right.size(), m.adjacency);
  std::vector<std::optional<Element>> by_right(m.right.size());
  std::size_t matched = 0;
  for (std::size_t l = 0; l < mate.size(); ++l) {
    if (mate[l]) {
      by_right[*mate[l]] = m.left[l];
      ++matched;
    }
  }
  if (matched != m.right.size()) return std::nullopt;
  ElementPairs pairs;
  pairs.reserve(matched);
  for (std::size_t r = 0; r < m.right.size(); ++r) pairs.emplace_back(*by_right[r], m.right[r]);
  return pairs;
}

const Certificate& QtTable::certificate(Element t, Element q) const {
  if (t >= sets_.size() || q >= target_.size() || !certificates_[t][q]) {
    throw ValidationError("no certificate: target element is not in Q_t");
  }
  return *certificates_[t][q];
}

namespace {

void require_tree(const Poset& tree) {
  if (!is_tree(tree)) throw ValidationError("source poset is not a tree");
}

// Children before parents: increasing depth, ties by declaration order.
std::vector<Element> bottom_up_order(const Poset& tree) {
  std::vector<Element> order(tree.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return tree.depth(a) < tree.depth(b); });
  return order;
}

}  // namespace

QtTable compute_qt(const Poset& tree, const Poset& target) {
  require_tree(tree);
  if (target.empty()) throw ValidationError("target poset is empty");

  QtTable table;
  table.tree_ = tree;
  table.target_ = target;
  const std::size_t nq = target.size();
  table.sets_.assign(tree.size(), ElementSet(nq));
  table.certificates_.assign(tree.size(), std::vector<std::optional<Certificate>>(nq));

  ElementSet maximal(nq);
  for (Element q : maximal_elements(target).members) maximal.set(q);

  for (Element t : bottom_up_order(tree)) {
    auto& set = table.sets_[t];
    auto& certs = table.certificates_[t];
    const auto children = tree.upper_covers(t);

    if (children.empty()) {
      set = maximal;
      for (auto q = set.find_first(); q != ElementSet::npos; q = set.find_next(q)) {
        certs[q] = LeafCertificate{};
      }
      continue;
    }

    for (Element s : children) {
      const auto& child = table.sets_[s];
      for (auto q = child.find_first(); q != ElementSet::npos; q = child.find_next(q)) {
        if (!set.test(q)) {
          set.set(q);
          certs[q] = InheritedCertificate{s};
        }
      }
    }

    const ElementSet inherited = set;
    for (Element q = 0; q < nq; ++q) {
      if (inherited.test(q)) continue;
      const auto succ = target.upper_covers(q);
      if (succ.size() > children.size()) continue;
      if (!std::all_of(succ.begin(), succ.end(), [&](Element p) { return inherited.test(p); })) {
        continue;
      }
      MatchInstance m;
      m.left.assign(children.begin(), children.end());
      m.right.assign(succ.begin(), succ.end());
      m.adjacency.resize(m.left.size());
      for (std::size_t l = 0; l < m.left.size(); ++l) {
        for (std::size_t r = 0; r < m.right.size(); ++r) {
          if (table.sets_[m.left[l]].test(m.right[r])) m.adjacency[l].push_back(r);
        }
      }
      if (auto pairs = saturating_matching(m)) {
        set.set(q);
        certs[q] = MatchedCertificate{std::move(*pairs)};
      }
    }
  }
  return table;
}

namespace {

class WitnessBuilder {
 public:
  explicit WitnessBuilder(const QtTable& table)
      : table_(table), tree_(table.tree()), target_(table.target()),
        image_(tree_.size(), tree_.size()) {}

  // Writes a surjective p-morphism up(t) -> up(q) into image_.
  void fill(Element t, Element q) {
    const Certificate& cert = table_.certificate(t, q);
    image_[t] = q;
    if (std::holds_alternative<LeafCertificate>(cert)) return;

    std::vector<Element> used;
    if (const auto* inh = std::get_if<InheritedCertificate>(&cert)) {
      fill(inh->successor, q);
      used.push_back(inh->successor);
    } else {
      for (auto [s, p] : std::get<MatchedCertificate>(cert).pairs) {
        fill(s, p);
        used.push_back(s);
      }
    }
    const Element filler = first_maximal_above(q);
    for (Element c : tree_.upper_covers(t)) {
      if (std::find(used.begin(), used.end(), c) == used.end()) paint(c, filler);
    }
  }

  // Sends every element of up(x) to y.
  void paint(Element x, Element y) {
    const auto& up = tree_.up(x);
    for (auto z = up.find_first(); z != ElementSet::npos; z = up.find_next(z)) image_[z] = y;
  }

  Element first_maximal_above(Element q) const {
    const auto& up = target_.up(q);
    for (auto y = up.find_first(); y != ElementSet::npos; y = up.find_next(y)) {
      if (target_.upper_covers(y).empty()) return y;
    }
    return q;  // unreachable: every finite upset has a maximal element
  }

  const ElementMap& image() const { return image_; }

 private:
  const QtTable& table_;
  const Poset& tree_;
  const Poset& target_;
  ElementMap image_;
};

std::size_t local_index(const std::vector<Element>& to_parent, Element x) {
  return static_cast<std::size_t>(std::lower_bound(to_parent.begin(), to_parent.end(), x) -
                                  to_parent.begin());
}

}  // namespace

UpsetMorphism reconstruct_witness(const QtTable& table, Element t, Element q) {
  if (t >= table.tree().size() || q >= table.target().size() || !table.contains(t, q)) {
    throw ValidationError("cannot reconstruct: target element is not in Q_t");
  }
  WitnessBuilder builder(table);
  builder.fill(t, q);

  UpsetMorphism out;
  out.source_root = t;
  out.target_root = q;
  out.source = induced_upset(table.tree(), t);
  out.target = induced_upset(table.target(), q);
  out.map.reserve(out.source.to_parent.size());
  for (Element x : out.source.to_parent) {
    out.map.push_back(local_index(out.target.to_parent, builder.image()[x]));
  }
  return out;
}

std::optional<ElementMap> tree_spmorph(const Poset& tree, const Poset& target) {
  require_tree(tree);
  const auto target_root = root_of(target);
  if (!target_root) return std::nullopt;

  QtTable table = compute_qt(tree, target);
  const Element r = *root_of(tree);
  if (!table.contains(r, *target_root)) return std::nullopt;

  // up(r) = T and up(root) = Q, so local indices are global ones.
  ElementMap h = reconstruct_witness(table, r, *target_root).map;
  if (auto v = verify_pmorphism(tree, target, h, true); !v) {
    throw IntegrityError("reconstructed witness fails verification: " + v.violation);
  }
  return h;
}

LogContainResult tree_logcontain(const Poset& tree, const Poset& target) {
  require_tree(tree);
  QtTable table = compute_qt(tree, target);
  const Element r = *root_of(tree);

  LogContainResult result;
  for (Element y : minimal_elements(target).members) {
    if (!table.contains(r, y)) {
      result.uncovered = y;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.push_back({reconstruct_witness(table, r, y), SolveMethod::tree});
  }
  result.contained = true;
  return result;
}

std::string dump_qt(const QtTable& table) {
  std::ostringstream out;
  for (Element t = 0; t < table.tree().size(); ++t) {
    out << "qt " << table.tree().name(t) << " :";
    for (Element q : table.members(t)) out << ' ' << table.target().name(q);
    out << '\n';
  }
  return out.str();
}

}  // namespace tablog
