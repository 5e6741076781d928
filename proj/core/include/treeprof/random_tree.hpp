#pragma once

#include "treeprof/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <span>

namespace treeprof {

/// Decodes a Pruefer sequence of length n-2 with entries in [0, n).
Tree from_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// Uniform random labeled tree on n vertices (uniform Pruefer sequence).
/// Deterministic for a fixed seed.
Tree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace treeprof
