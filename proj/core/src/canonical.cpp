#include "treeprof/canonical.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace treeprof {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Small adjacency view shared by whole trees and induced subtrees.
struct LocalGraph {
  std::vector<std::vector<std::size_t>> adj;
  std::size_t size() const { return adj.size(); }
};

LocalGraph local_graph(const Tree& t) {
  LocalGraph g;
  g.adj.resize(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    auto nb = t.neighbors(v);
    g.adj[v].assign(nb.begin(), nb.end());
  }
  return g;
}

std::vector<std::size_t> local_centers(const LocalGraph& g) {
  const std::size_t n = g.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.adj[v].size();
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : layer) {
      for (std::size_t w : g.adj[leaf]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct Rooted {
  std::string code;
  BigInt automorphisms;
};

// AHU encoding of the component of `root` once the edge to `blocked` is removed.
Rooted encode_rooted(const LocalGraph& g, std::size_t root, std::size_t blocked, bool with_aut) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(n, kNone);
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t x = order[i];
    for (std::size_t y : g.adj[x]) {
      if (y == blocked && x == root) continue;
      if (parent[y] == kNone) {
        parent[y] = x;
        order.push_back(y);
      }
    }
  }

  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<BigInt> aut;
  if (with_aut) aut.assign(n, BigInt(1));
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t x = *it;
    auto& kids = child_codes[x];
    std::sort(kids.begin(), kids.end());
    if (with_aut) {
      std::size_t run = 1;
      for (std::size_t i = 1; i <= kids.size(); ++i) {
        if (i < kids.size() && kids[i] == kids[i - 1]) {
          ++run;
        } else {
          for (std::size_t f = 2; f <= run; ++f) aut[x] *= f;
          run = 1;
        }
      }
    }
    std::string code = "(";
    for (auto& c : kids) code += c;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (x == root) {
      result = std::move(code);
    } else {
      child_codes[parent[x]].push_back(std::move(code));
      if (with_aut) aut[parent[x]] *= aut[x];
    }
  }
  return {std::move(result), with_aut ? aut[root] : BigInt(1)};
}

CanonicalCode canonical_of(const LocalGraph& g) {
  auto c = local_centers(g);
  if (c.size() == 1) return {encode_rooted(g, c[0], kNone, false).code};
  auto a = encode_rooted(g, c[0], kNone, false).code;
  auto b = encode_rooted(g, c[1], kNone, false).code;
  return {std::min(a, b)};
}

}  // namespace

std::vector<Vertex> centers(const Tree& t) {
  auto c = local_centers(local_graph(t));
  return {c.begin(), c.end()};
}

CanonicalCode canonicalize(const Tree& t) { return canonical_of(local_graph(t)); }

CanonicalCode canonicalize_subset(const Tree& host, std::span<const Vertex> subset) {
  LocalGraph g;
  g.adj.resize(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex y : host.neighbors(subset[i])) {
      auto pos = std::find(subset.begin(), subset.end(), y);
      if (pos != subset.end()) g.adj[i].push_back(static_cast<std::size_t>(pos - subset.begin()));
    }
  }
  return canonical_of(g);
}

BigInt automorphism_count(const Tree& t) {
  auto g = local_graph(t);
  auto c = local_centers(g);
  if (c.size() == 1) return encode_rooted(g, c[0], kNone, true).automorphisms;
  auto a = encode_rooted(g, c[0], c[1], true);
  auto b = encode_rooted(g, c[1], c[0], true);
  BigInt total = a.automorphisms * b.automorphisms;
  if (a.code == b.code) total *= 2;
  return total;
}

}  // namespace treeprof
