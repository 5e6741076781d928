#include "treeprof/census.hpp"

#include "treeprof/errors.hpp"

#include <algorithm>
#include <thread>

namespace treeprof {
namespace {

// Exclusive-neighborhood extension from a fixed smallest vertex. `closed[x]`
// counts members of the current set whose closed neighborhood contains x.
class Extender {
 public:
  Extender(const Tree& t, std::size_t k, const std::function<void(std::span<const Vertex>)>& visit)
      : t_(t), k_(k), visit_(visit), closed_(t.size(), 0) {
    members_.reserve(k);
  }

  void run_from(Vertex root) {
    root_ = root;
    push(root);
    std::vector<Vertex> ext;
    for (Vertex u : t_.neighbors(root))
      if (u > root) ext.push_back(u);
    extend(std::move(ext));
    pop(root);
  }

 private:
  void push(Vertex w) {
    members_.push_back(w);
    ++closed_[w];
    for (Vertex x : t_.neighbors(w)) ++closed_[x];
  }
  void pop(Vertex w) {
    members_.pop_back();
    --closed_[w];
    for (Vertex x : t_.neighbors(w)) --closed_[x];
  }

  void extend(std::vector<Vertex> ext) {
    if (members_.size() == k_) {
      visit_(members_);
      return;
    }
    while (!ext.empty()) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : t_.neighbors(w))
        if (u > root_ && closed_[u] == 0) next.push_back(u);
      push(w);
      extend(std::move(next));
      pop(w);
    }
  }

  const Tree& t_;
  std::size_t k_;
  const std::function<void(std::span<const Vertex>)>& visit_;
  std::vector<std::uint32_t> closed_;
  std::vector<Vertex> members_;
  Vertex root_ = 0;
};

}  // namespace

void for_each_connected_subset_rooted(const Tree& t, std::size_t k, Vertex root,
                                      const std::function<void(std::span<const Vertex>)>& visit) {
  if (k == 0) throw PreconditionError("subset size must be at least 1");
  t.degree(root);  // range check
  Extender(t, k, visit).run_from(root);
}

void for_each_connected_subset(const Tree& t, std::size_t k,
                               const std::function<void(std::span<const Vertex>)>& visit) {
  if (k == 0) throw PreconditionError("subset size must be at least 1");
  Extender ex(t, k, visit);
  for (Vertex r = 0; r < t.size(); ++r) ex.run_from(r);
}

BigInt subtree_total(const Tree& t, std::size_t k) {
  if (k == 0) throw PreconditionError("subset size must be at least 1");
  const std::size_t n = t.size();
  if (k > n) return 0;

  // BFS order from vertex 0; children processed before parents.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : t.neighbors(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }

  // ways[v][s]: connected sets of size s inside v's subtree whose top vertex is v.
  std::vector<std::vector<BigInt>> ways(n);
  BigInt total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    std::vector<BigInt> acc(k + 1, BigInt(0));
    acc[1] = 1;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent[v] && v != 0) continue;
      const auto& child = ways[c];
      std::vector<BigInt> merged = acc;
      for (std::size_t a = 1; a <= k; ++a) {
        if (acc[a] == 0) continue;
        for (std::size_t b = 1; a + b <= k; ++b)
          if (child[b] != 0) merged[a + b] += acc[a] * child[b];
      }
      acc = std::move(merged);
      ways[c].clear();
      ways[c].shrink_to_fit();
    }
    total += acc[k];
    ways[v] = std::move(acc);
  }
  return total;
}

std::uint64_t count_connected_subsets(const Tree& t, std::size_t k, CensusOptions options) {
  if (k == 0) throw PreconditionError("subset size must be at least 1");
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned slot) {
    std::uint64_t local = 0;
    std::function<void(std::span<const Vertex>)> visit = [&](std::span<const Vertex>) { ++local; };
    Extender ex(t, k, visit);
    for (std::size_t r = slot; r < t.size(); r += jobs) ex.run_from(static_cast<Vertex>(r));
    partial[slot] = local;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace treeprof
