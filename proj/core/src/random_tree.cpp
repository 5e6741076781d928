#include "treeprof/random_tree.hpp"

#include "treeprof/errors.hpp"

#include <random>

namespace treeprof {

Tree from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n == 0) throw PreconditionError("tree must have at least one vertex");
  if (n == 1) return Tree::single_vertex();
  if (sequence.size() != n - 2) throw PreconditionError("Pruefer sequence must have length n-2");

  std::vector<std::size_t> deg(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw PreconditionError("Pruefer entry out of range");
    ++deg[x];
  }
  // Linear-time decoding: `ptr` scans for the next leaf, `leaf` may jump back
  // to a freshly exposed smaller leaf.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : sequence) {
    edges.push_back({static_cast<Vertex>(leaf), x});
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)});
  return Tree::from_edges(n, edges);
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return n == 2 ? Tree::path(2) : from_pruefer(n, {});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return from_pruefer(n, seq);
}

}  // namespace treeprof
