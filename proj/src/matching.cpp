#include "tablog/matching.hpp"

#include <limits>

namespace tablog {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t right_count, const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), left_mate_(adj.size(), kFree), right_mate_(right_count, kFree),
        dist_(adj.size()) {}

  std::vector<std::optional<std::size_t>> run() {
    while (layer()) {
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (left_mate_[l] == kFree) augment(l);
      }
    }
    std::vector<std::optional<std::size_t>> out(adj_.size());
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (left_mate_[l] != kFree) out[l] = left_mate_[l];
    }
    return out;
  }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  // BFS from all free left vertices; true if some free right vertex is
  // reachable along alternating paths.
  bool layer() {
    std::vector<std::size_t> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (left_mate_[l] == kFree) {
        dist_[l] = 0;
        queue.push_back(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t l = queue[head];
      for (std::size_t r : adj_[l]) {
        std::size_t next = right_mate_[r];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t l) {
    for (std::size_t r : adj_[l]) {
      std::size_t next = right_mate_[r];
      if (next == kFree || (dist_[next] == dist_[l] + 1 && augment(next))) {
        left_mate_[l] = r;
        right_mate_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> left_mate_;
  std::vector<std::size_t> right_mate_;
  std::vector<std::size_t> dist_;
};

}  // namespace

std::vector<std::optional<std::size_t>> maximum_bipartite_matching(
    std::size_t right_count, const std::vector<std::vector<std::size_t>>& adjacency) {
  return HopcroftKarp(right_count, adjacency).run();
}

}  // namespace tablog
