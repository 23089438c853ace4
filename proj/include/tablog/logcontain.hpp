#pragma once

#include <optional>
#include <vector>

#include "tablog/morphism.hpp"
#include "tablog/poset.hpp"

namespace tablog {

enum class SolveMethod { brute, tree };

struct ContainmentWitness {
  UpsetMorphism morphism;
  SolveMethod method = SolveMethod::brute;
};

struct LogContainResult {
  bool contained = false;
  // One per minimal element of the target, in declaration order, when
  // contained.
  std::vector<ContainmentWitness> witnesses;
  // First minimal element of the target with no p-morphic preimage.
  std::optional<Element> uncovered;
};

struct LogContainOptions {
  // Independent minimal targets are searched on this many threads. The
  // decision and witnesses do not depend on it.
  unsigned jobs = 1;
};

// L(P) contained in L(Q): every up(y), y minimal in Q, is a p-morphic image
// of some up(x). Candidates x are tried by decreasing |up(x)|, skipping
// those too shallow or too small; a tree upset goes to the tree solver,
// anything else to spmorph_brute. Throws ValidationError on empty input.
LogContainResult logcontain(const Poset& source, const Poset& target,
                            const LogContainOptions& options = {});

}  // namespace tablog
