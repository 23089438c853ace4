#pragma once

#include <optional>
#include <span>

#include "tablog/element_map.hpp"
#include "tablog/error.hpp"
#include "tablog/poset.hpp"

namespace tablog {

// Checks (HP) for all x <= y, (BP) for all x and all y >= h(x), and
// optionally surjectivity. The violation names the first failing pair in
// declaration order. Throws ValidationError if `h` is not total into Q.
Verdict verify_pmorphism(const Poset& source, const Poset& target, std::span<const Element> h,
                         bool require_surjective);

// Backtracking search for a surjective p-morphism source -> target.
//
// Source elements are assigned top-down (maximal elements first, then each
// element as soon as all of its upper covers are placed, most recently
// enabled first), so when x is assigned the whole upset of x already has
// images. Candidate images q for x must satisfy
//   depth(q) <= depth(x) and |up(q)| <= |up(x)|,
//   q <= h(s) for every upper cover s of x,
//   up(q) \ {q} is contained in h(up(x) \ {x}),
// the last of which is (BP) at x. Values are tried in declaration order.
std::optional<ElementMap> spmorph_brute(const Poset& source, const Poset& target);

// A map between the principal upsets up(source_root) and up(target_root).
struct UpsetMorphism {
  Element source_root = 0;
  Element target_root = 0;
  Subposet source;
  Subposet target;
  ElementMap map;  // indices local to source.poset / target.poset
};

}  // namespace tablog
