#include "tablog/morphism.hpp"

#include <algorithm>

namespace tablog {

Verdict verify_pmorphism(const Poset& source, const Poset& target, std::span<const Element> h,
                         bool require_surjective) {
  if (h.size() != source.size()) throw ValidationError("poset map is not total");
  for (Element y : h) {
    if (y >= target.size()) throw ValidationError("poset map leaves the target poset");
  }

  for (Element x = 0; x < source.size(); ++x) {
    const auto& up = source.up(x);
    for (auto y = up.find_first(); y != ElementSet::npos; y = up.find_next(y)) {
      if (!target.leq(h[x], h[y])) {
        return Verdict::reject("(HP) fails at (" + source.name(x) + ", " + source.name(y) +
                               "): " + target.name(h[x]) + " is not below " + target.name(h[y]));
      }
    }
  }

  for (Element x = 0; x < source.size(); ++x) {
    ElementSet image(target.size());
    const auto& up = source.up(x);
    for (auto z = up.find_first(); z != ElementSet::npos; z = up.find_next(z)) image.set(h[z]);
    const auto& need = target.up(h[x]);
    for (auto y = need.find_first(); y != ElementSet::npos; y = need.find_next(y)) {
      if (!image.test(y)) {
        return Verdict::reject("(BP) fails at (" + source.name(x) + ", " + target.name(y) +
                               "): nothing above " + source.name(x) + " maps to " +
                               target.name(y));
      }
    }
  }

  if (require_surjective) {
    ElementSet hit(target.size());
    for (Element y : h) hit.set(y);
    for (Element y = 0; y < target.size(); ++y) {
      if (!hit.test(y)) return Verdict::reject("not surjective: " + target.name(y) + " has no preimage");
    }
  }
  return Verdict::accept();
}

namespace {

// Maximal elements first, then a stack of newly enabled elements.
std::vector<Element> assignment_order(const Poset& p) {
  std::vector<std::size_t> pending(p.size());
  for (Element x = 0; x < p.size(); ++x) pending[x] = p.upper_covers(x).size();

  std::vector<Element> order;
  std::vector<Element> stack;
  auto place = [&](Element x) {
    order.push_back(x);
    auto lower = p.lower_covers(x);
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
      if (--pending[*it] == 0) stack.push_back(*it);
    }
  };
  for (Element m : maximal_elements(p).members) place(m);
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    place(x);
  }
  return order;
}

class SpmorphSearch {
 public:
  SpmorphSearch(const Poset& p, const Poset& q)
      : p_(p), q_(q), order_(assignment_order(p)), image_(p.size(), 0),
        reach_(p.size(), ElementSet(q.size())), hits_(q.size(), 0), missing_(q.size()) {}

  std::optional<ElementMap> run() {
    if (q_.empty()) return p_.empty() ? std::optional<ElementMap>(ElementMap{}) : std::nullopt;
    if (p_.size() < q_.size()) return std::nullopt;
    if (assign(0)) return image_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t depth) {
    if (depth == order_.size()) return missing_ == 0;
    const Element x = order_[depth];
    const auto uppers = p_.upper_covers(x);

    ElementSet above(q_.size());
    for (Element s : uppers) above |= reach_[s];

    const std::size_t remaining = order_.size() - depth - 1;
    for (Element y = 0; y < q_.size(); ++y) {
      if (q_.depth(y) > p_.depth(x) || q_.upset_size(y) > p_.upset_size(x)) continue;
      if (!std::all_of(uppers.begin(), uppers.end(),
                       [&](Element s) { return q_.leq(y, image_[s]); })) {
        continue;
      }
      ElementSet owed = q_.up(y) - above;
      owed.reset(y);
      if (owed.any()) continue;

      image_[x] = y;
      if (hits_[y]++ == 0) --missing_;
      if (missing_ <= remaining) {
        reach_[x] = above;
        reach_[x].set(y);
        if (assign(depth + 1)) return true;
      }
      if (--hits_[y] == 0) ++missing_;
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<Element> order_;
  ElementMap image_;
  std::vector<ElementSet> reach_;
  std::vector<std::size_t> hits_;
  std::size_t missing_;
};

}  // namespace

std::optional<ElementMap> spmorph_brute(const Poset& source, const Poset& target) {
  return SpmorphSearch(source, target).run();
}

}  // namespace tablog
