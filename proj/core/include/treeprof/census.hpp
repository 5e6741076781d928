#pragma once

#include "treeprof/numeric.hpp"
#include "treeprof/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace treeprof {

/// Parallelism for a single census. Library code only starts threads when
/// asked to through `jobs > 1`.
struct CensusOptions {
  unsigned jobs = 1;
};

/// Calls `visit` once for every vertex set of size k that induces a
/// connected subtree of `t`.
///
/// Sets are grown from their smallest vertex by exclusive-neighborhood
/// extension, so every set is produced exactly once. The span passed to
/// `visit` is only valid during the call. Single-threaded.
void for_each_connected_subset(const Tree& t, std::size_t k,
                               const std::function<void(std::span<const Vertex>)>& visit);

/// Same enumeration restricted to sets whose smallest vertex is `root`.
void for_each_connected_subset_rooted(const Tree& t, std::size_t k, Vertex root,
                                      const std::function<void(std::span<const Vertex>)>& visit);

/// Z_k(t) by rooted dynamic programming (no enumeration), O(n k^2).
BigInt subtree_total(const Tree& t, std::size_t k);

/// Z_k(t) by running the enumeration and counting.
std::uint64_t count_connected_subsets(const Tree& t, std::size_t k, CensusOptions options = {});

}  // namespace treeprof
