#include "treeprof/tree.hpp"

#include "treeprof/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace treeprof {

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw PreconditionError("tree must have at least one vertex");
  if (n > std::numeric_limits<Vertex>::max() / 2)
    throw PreconditionError("tree too large");
  if (edges.size() != n - 1)
    throw PreconditionError("a tree on " + std::to_string(n) + " vertices needs " +
                            std::to_string(n - 1) + " edges, got " +
                            std::to_string(edges.size()));

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }

  Tree t;
  t.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) t.offsets_[v + 1] = t.offsets_[v] + deg[v];
  t.adjacency_.resize(2 * (n - 1));
  std::vector<std::uint32_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& e : edges) {
    t.adjacency_[fill[e.u]++] = e.v;
    t.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = t.adjacency_.begin() + t.offsets_[v];
    auto last = t.adjacency_.begin() + t.offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw PreconditionError("parallel edge at vertex " + std::to_string(v));
  }

  // n-1 edges and connected <=> tree.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw PreconditionError("edge list is disconnected (contains a cycle)");
  return t;
}

Tree Tree::single_vertex() {
  Tree t;
  t.offsets_ = {0, 0};
  return t;
}

Tree Tree::path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.push_back({Vertex(i - 1), Vertex(i)});
  return from_edges(n, e);
}

Tree Tree::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, Vertex(i)});
  return from_edges(leaves + 1, e);
}

Tree Tree::spider(std::span<const std::size_t> legs) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return from_edges(next, e);
}

void Tree::check_vertex(Vertex v) const {
  if (v >= size())
    throw IndexError("vertex " + std::to_string(v) + " out of range for tree of size " +
                     std::to_string(size()));
}

std::size_t Tree::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Tree::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() - 1);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<std::size_t> Tree::degrees() const {
  std::vector<std::size_t> out(size());
  for (std::size_t v = 0; v < size(); ++v) out[v] = offsets_[v + 1] - offsets_[v];
  return out;
}

std::vector<std::size_t> distances_from(const Tree& t, Vertex source) {
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(t.size(), kUnseen);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace treeprof
