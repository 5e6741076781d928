#include "treeprof/constructions.hpp"

#include "treeprof/errors.hpp"

#include <string>

namespace treeprof {

void MillipedeSpec::validate() const {
  if (pendants.empty()) throw PreconditionError("millipede pattern must be non-empty");
  if (length == 0) throw PreconditionError("millipede length must be at least 1");
}

std::size_t MillipedeSpec::vertex_count() const {
  validate();
  std::size_t total = length;
  for (std::size_t j = 0; j < length; ++j) total += pendants_at(j);
  return total;
}

Tree millipede(const MillipedeSpec& spec) {
  const std::size_t n = spec.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t j = 1; j < spec.length; ++j) edges.push_back({Vertex(j - 1), Vertex(j)});
  Vertex next = static_cast<Vertex>(spec.length);
  for (std::size_t j = 0; j < spec.length; ++j)
    for (std::size_t i = 0; i < spec.pendants_at(j); ++i) edges.push_back({Vertex(j), next++});
  return Tree::from_edges(n, edges);
}

Vertex lowest_leaf(const Tree& t) {
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.is_leaf(v)) return v;
  throw InternalError("tree without a leaf");
}

Tree glue(const Tree& s, const Tree& t, std::size_t k, Vertex leaf_s, Vertex leaf_t) {
  if (k < 2) throw PreconditionError("gluing distance must be at least 2");
  if (!s.is_leaf(leaf_s))
    throw PreconditionError("vertex " + std::to_string(leaf_s) + " is not a leaf of the first tree");
  if (!t.is_leaf(leaf_t))
    throw PreconditionError("vertex " + std::to_string(leaf_t) + " is not a leaf of the second tree");

  const auto offset = static_cast<Vertex>(s.size());
  const std::size_t n = s.size() + t.size() + k - 1;
  std::vector<Edge> edges = s.edges();
  edges.reserve(n - 1);
  for (const Edge& e : t.edges()) edges.push_back({e.u + offset, e.v + offset});

  Vertex prev = leaf_s;
  Vertex next = static_cast<Vertex>(s.size() + t.size());
  for (std::size_t i = 0; i + 1 < k; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  edges.push_back({prev, leaf_t + offset});
  return Tree::from_edges(n, edges);
}

Tree glue(const Tree& s, const Tree& t, std::size_t k) {
  return glue(s, t, k, lowest_leaf(s), lowest_leaf(t));
}

namespace {

CutPart side_of(const Tree& t, Vertex start, Vertex across, std::size_t tail) {
  std::vector<char> in(t.size(), 0);
  std::vector<Vertex> stack{start};
  in[start] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x)) {
      if (in[y] || (x == start && y == across)) continue;
      in[y] = 1;
      stack.push_back(y);
    }
  }

  CutPart part{Tree::single_vertex(), 0, {}};
  std::vector<Vertex> local(t.size(), kNewVertex);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (in[v]) {
      local[v] = static_cast<Vertex>(part.origin.size());
      part.origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges())
    if (in[e.u] && in[e.v]) edges.push_back({local[e.u], local[e.v]});

  Vertex prev = local[start];
  for (std::size_t i = 0; i < tail; ++i) {
    auto next = static_cast<Vertex>(part.origin.size());
    part.origin.push_back(kNewVertex);
    edges.push_back({prev, next});
    prev = next;
  }
  part.tree = Tree::from_edges(part.origin.size(), edges);
  part.endpoint = local[start];
  return part;
}

}  // namespace

CutResult cut(const Tree& t, Vertex u, Vertex v, std::size_t i, std::size_t j) {
  if (!t.has_edge(u, v))
    throw PreconditionError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return {side_of(t, u, v, i), side_of(t, v, u, j)};
}

Tree depth_two_tree(std::size_t root_degree, std::size_t child_degree) {
  if (child_degree == 0) throw PreconditionError("child degree must be at least 1");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t c = 0; c < root_degree; ++c) {
    Vertex child = next++;
    edges.push_back({0, child});
    for (std::size_t l = 0; l + 1 < child_degree; ++l) edges.push_back({child, next++});
  }
  return Tree::from_edges(next, edges);
}

Tree caterpillar(const std::vector<std::size_t>& pendant_counts) {
  if (pendant_counts.empty()) throw PreconditionError("caterpillar spine must be non-empty");
  std::vector<Edge> edges;
  const std::size_t m = pendant_counts.size();
  for (std::size_t j = 1; j < m; ++j) edges.push_back({Vertex(j - 1), Vertex(j)});
  Vertex next = static_cast<Vertex>(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < pendant_counts[j]; ++i) edges.push_back({Vertex(j), next++});
  return Tree::from_edges(next, edges);
}

}  // namespace treeprof
