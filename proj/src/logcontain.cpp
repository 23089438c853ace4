#include "tablog/logcontain.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "tablog/tree_solver.hpp"

namespace tablog {

namespace {

std::optional<ContainmentWitness> cover_minimal(const Poset& source, const Poset& target,
                                                Element y, const std::vector<Element>& candidates) {
  Subposet goal = induced_upset(target, y);
  for (Element x : candidates) {
    if (source.depth(x) < target.depth(y) || source.upset_size(x) < target.upset_size(y)) continue;
    Subposet from = induced_upset(source, x);
    const bool tree = is_tree(from.poset);
    auto h = tree ? tree_spmorph(from.poset, goal.poset) : spmorph_brute(from.poset, goal.poset);
    if (h) {
      return ContainmentWitness{{x, y, std::move(from), goal, std::move(*h)},
                                tree ? SolveMethod::tree : SolveMethod::brute};
    }
  }
  return std::nullopt;
}

}  // namespace

LogContainResult logcontain(const Poset& source, const Poset& target,
                            const LogContainOptions& options) {
  if (source.empty() || target.empty()) throw ValidationError("logcontain needs nonempty posets");

  std::vector<Element> candidates(source.size());
  std::iota(candidates.begin(), candidates.end(), Element{0});
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
    return source.upset_size(a) > source.upset_size(b);
  });

  const auto minimal = minimal_elements(target).members;
  std::vector<std::optional<ContainmentWitness>> found(minimal.size());
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  for (std::size_t begin = 0; begin < minimal.size(); begin += jobs) {
    const std::size_t end = std::min(minimal.size(), begin + jobs);
    if (jobs == 1) {
      found[begin] = cover_minimal(source, target, minimal[begin], candidates);
    } else {
      std::vector<std::future<std::optional<ContainmentWitness>>> batch;
      for (std::size_t i = begin; i < end; ++i) {
        batch.push_back(std::async(std::launch::async, cover_minimal, std::cref(source),
                                   std::cref(target), minimal[i], std::cref(candidates)));
      }
      for (std::size_t i = begin; i < end; ++i) found[i] = batch[i - begin].get();
    }
    for (std::size_t i = begin; i < end; ++i) {
      if (!found[i]) {
        LogContainResult no;
        no.uncovered = minimal[i];
        return no;
      }
    }
  }

  LogContainResult yes;
  yes.contained = true;
  for (auto& w : found) yes.witnesses.push_back(std::move(*w));
  return yes;
}

}  // namespace tablog
