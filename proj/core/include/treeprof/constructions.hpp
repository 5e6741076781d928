#pragma once

#include "treeprof/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace treeprof {

/// Periodic pendant pattern D = (d_1, ..., d_l) plus spine length n.
///
/// Spine vertex v_j (1-based) carries D[(j-1) mod l] + extra_pendants leaves.
/// The default offset of 2 is the "d_i + 2 pendant vertices" definition;
/// offset 0 gives the classic d-millipede in which every spine vertex has
/// exactly d leaves (the convention under which the known facet slopes of
/// the 5-profile region are reproduced, see region.hpp).
struct MillipedeSpec {
  std::vector<std::size_t> pendants;
  std::size_t length = 1;
  std::size_t extra_pendants = 2;

  /// Throws PreconditionError unless pendants is non-empty and length >= 1.
  void validate() const;
  std::size_t pendants_at(std::size_t spine_index) const {
    return pendants[spine_index % pendants.size()] + extra_pendants;
  }
  /// n + sum over spine of (D[j mod l] + extra_pendants).
  std::size_t vertex_count() const;
};

/// Spine vertices are 0..n-1 in order, then each spine vertex's leaves in turn.
Tree millipede(const MillipedeSpec& spec);

/// s glued to t along a fresh path with k-1 internal vertices, so the chosen
/// leaves end at distance exactly k. Vertices of s keep their indices, t's are
/// shifted by |s|, and the new path vertices come last (from the s side).
Tree glue(const Tree& s, const Tree& t, std::size_t k, Vertex leaf_s, Vertex leaf_t);
/// glue() with the lowest-index leaf of each tree.
Tree glue(const Tree& s, const Tree& t, std::size_t k);

Vertex lowest_leaf(const Tree& t);

inline constexpr Vertex kNewVertex = std::numeric_limits<Vertex>::max();

struct CutPart {
  Tree tree;
  /// Index of the cut endpoint inside `tree`.
  Vertex endpoint;
  /// origin[x] is the original vertex of x, or kNewVertex for path vertices.
  std::vector<Vertex> origin;
};

struct CutResult {
  CutPart first;   // contains u
  CutPart second;  // contains v
};

/// (i, j)-cut around the edge {u, v}: drop the edge, hang an i-edge path on u
/// and a j-edge path on v. Original vertices keep their relative order.
CutResult cut(const Tree& t, Vertex u, Vertex v, std::size_t i, std::size_t j);

/// Depth-2 tree: a root of degree `root_degree` whose children all have
/// degree `child_degree` (child_degree - 1 leaves each).
Tree depth_two_tree(std::size_t root_degree, std::size_t child_degree);

/// Caterpillar with spine 0..m-1 and pendant_counts[i] leaves at spine vertex i.
Tree caterpillar(const std::vector<std::size_t>& pendant_counts);

}  // namespace treeprof
