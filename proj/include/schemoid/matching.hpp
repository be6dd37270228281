#pragma once

#include <cstdint>
#include <vector>

namespace schemoid {

/// Maximum matching on a bipartite graph via augmenting paths (Kuhn's
/// algorithm), O(|V||E|). Left/right node counts are fixed at
/// construction; edges are added left -> right.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right)
      : adj_(left), match_left_(left, kUnmatched), match_right_(right, kUnmatched) {}

  void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

  /// Returns the size of a maximum matching.
  std::size_t solve() {
    std::size_t matched = 0;
    std::vector<std::uint32_t> seen(match_right_.size(), 0);
    std::uint32_t stamp = 0;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      ++stamp;
      if (augment(l, stamp, seen)) ++matched;
    }
    return matched;
  }

  /// Right partner of left node l after solve(), or kUnmatched.
  std::size_t partner_of(std::size_t l) const { return match_left_[l]; }

  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t l, std::uint32_t stamp, std::vector<std::uint32_t>& seen) {
    for (std::size_t r : adj_[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (match_right_[r] == kUnmatched || augment(match_right_[r], stamp, seen)) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
};

}  // namespace schemoid
