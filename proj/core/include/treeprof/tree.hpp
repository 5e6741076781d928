#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace treeprof {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable unlabeled tree stored as compressed sorted adjacency lists.
///
/// Every constructed Tree is connected with exactly n-1 edges, no loops and
/// no parallel edges; factories throw PreconditionError otherwise.
class Tree {
 public:
  /// Builds a tree on `n` vertices from an edge list in any order/orientation.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  static Tree single_vertex();
  /// Path on `n` vertices, labeled 0..n-1 along the path.
  static Tree path(std::size_t n);
  /// Star K_{1,leaves}; the center is vertex 0.
  static Tree star(std::size_t leaves);
  /// Spider: center 0 with one path leg per entry of `legs` (leg lengths in edges).
  static Tree spider(std::span<const std::size_t> legs);

  std::size_t size() const noexcept { return offsets_.size() - 1; }

  /// Throws IndexError when v is out of range.
  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const;
  /// Degree <= 1; the only vertex of a single-vertex tree counts as a leaf.
  bool is_leaf(Vertex v) const { return degree(v) <= 1; }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Tree() = default;
  void check_vertex(Vertex v) const;

  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

inline std::size_t degree(const Tree& t, Vertex v) { return t.degree(v); }
inline std::size_t max_degree(const Tree& t) { return t.max_degree(); }

/// BFS distances from `source`.
std::vector<std::size_t> distances_from(const Tree& t, Vertex source);

}  // namespace treeprof
