#pragma once

// Brute-force references used only by tests. Nothing here calls the
// census, canonical forms or degree formulas under test.

#include "treeprof/tree.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace treeprof::oracle {

/// Calls visit(subset) for every k-subset of {0..n-1} (lexicographic).
inline void for_each_k_subset(std::size_t n, std::size_t k,
                              const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (k > n) return;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Number of host edges with both ends in the subset.
inline std::size_t induced_edges(const Tree& t, const std::vector<Vertex>& subset) {
  std::size_t e = 0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      if (t.has_edge(subset[a], subset[b])) ++e;
  return e;
}

/// In a forest, a k-set is connected iff it spans k-1 edges.
inline bool connected_subset(const Tree& t, const std::vector<Vertex>& subset) {
  return induced_edges(t, subset) + 1 == subset.size();
}

inline std::uint64_t naive_subtree_total(const Tree& t, std::size_t k) {
  std::uint64_t total = 0;
  for_each_k_subset(t.size(), k, [&](const auto& s) { total += connected_subset(t, s); });
  return total;
}

/// (paths, stars, wyes) among connected 5-subsets, classified by the largest
/// degree inside the subset: 2 -> path, 4 -> star, 3 -> wye.
inline std::array<std::uint64_t, 3> naive_profile5(const Tree& t) {
  std::array<std::uint64_t, 3> out{};
  for_each_k_subset(t.size(), 5, [&](const auto& s) {
    if (!connected_subset(t, s)) return;
    std::size_t top = 0;
    for (Vertex v : s) {
      std::size_t d = 0;
      for (Vertex w : s) d += t.has_edge(v, w);
      top = std::max(top, d);
    }
    if (top == 2) ++out[0];
    else if (top == 4) ++out[1];
    else ++out[2];
  });
  return out;
}

/// Relabels vertices by `perm` (old -> new).
inline Tree permuted(const Tree& t, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree::from_edges(t.size(), edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Isomorphism by trying every bijection; only for n <= 8.
inline bool brute_isomorphic(const Tree& a, const Tree& b) {
  if (a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<Vertex> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto ea = a.edges();
  do {
    bool ok = true;
    for (const auto& e : ea)
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of automorphisms by brute force (n <= 8).
inline std::uint64_t brute_automorphisms(const Tree& t) {
  std::vector<Vertex> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = t.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : edges)
      if (!t.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Number of unlabeled free trees on n vertices via rooted-tree counts and
/// Otter's dissimilarity formula.
inline std::uint64_t free_tree_count(std::size_t n) {
  std::vector<std::uint64_t> rooted(n + 1, 0);  // rooted[m]: rooted trees on m vertices
  if (n >= 1) rooted[1] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    // rooted[m+1] = (1/m) sum_{k=1..m} (sum_{d|k} d rooted[d]) rooted[m-k+1]
    std::uint64_t acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      std::uint64_t s = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) s += d * rooted[d];
      acc += s * rooted[m - k + 1];
    }
    rooted[m + 1] = acc / m;
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = n - i;
    if (i < j) pairs += rooted[i] * rooted[j];
  }
  std::uint64_t total = rooted[n] - pairs;
  if (n % 2 == 0) total -= rooted[n / 2] * (rooted[n / 2] - 1) / 2;
  return total;
}

}  // namespace treeprof::oracle
