#pragma once

#include "treeprof/numeric.hpp"
#include "treeprof/tree.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace treeprof {

/// Byte string identifying the isomorphism class of an unlabeled tree.
///
/// The encoding roots the tree at its center (or the lexicographically
/// smaller of the two bicenter rootings) and writes each subtree as '('
/// followed by its children's encodings in sorted order and ')'.
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonicalize(const Tree& t);

/// Canonical code of the subtree of `host` induced by `subset`.
/// The subset must induce a connected subgraph (not checked).
CanonicalCode canonicalize_subset(const Tree& host, std::span<const Vertex> subset);

/// One or two center vertices (minimizers of eccentricity), ascending.
std::vector<Vertex> centers(const Tree& t);

/// |Aut(t)|, the number of label permutations preserving adjacency.
BigInt automorphism_count(const Tree& t);

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace treeprof

template <>
struct std::hash<treeprof::CanonicalCode> {
  std::size_t operator()(const treeprof::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
