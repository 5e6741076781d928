#pragma once

#include "treeprof/profile.hpp"
#include "treeprof/tree.hpp"

#include <cstdint>

namespace treeprof {

enum class MoveSet {
  /// Pendant add/remove on a caterpillar spine, spine extend/shrink.
  kCaterpillar,
  /// Leaf add/remove anywhere in the tree.
  kGeneral,
};

struct SearchOptions {
  std::uint64_t target = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  MoveSet moves = MoveSet::kCaterpillar;
};

struct SearchResult {
  Tree tree;
  Profile5 counts;
  /// Y == 9S + P and min(P, S, Y) >= target, verified by exact recount.
  bool converged = false;
  std::uint64_t moves_used = 0;
};

/// Local search for a tree on the Y = 9S + P face with all three counts at
/// least `target`. Returns the best tree seen when the budget runs out.
SearchResult search_equality_trees(const SearchOptions& options);

}  // namespace treeprof
