#include "treeprof/search.hpp"

#include "treeprof/constructions.hpp"
#include "treeprof/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

namespace treeprof {
namespace {

// Counts fit comfortably in 64 bits for the sizes the search visits
// (pendant counts are capped, trees stay in the low thousands of vertices).
struct Counts {
  std::int64_t paths = 0, stars = 0, wyes = 0;
};

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::int64_t choose4(std::int64_t n) { return n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24; }

// Vertex-centered formulas specialised to a caterpillar: only spine
// neighbours have d_u - 1 > 0.
Counts caterpillar_counts(const std::vector<std::size_t>& pendants) {
  const std::size_t m = pendants.size();
  auto deg = [&](std::size_t i) -> std::int64_t {
    return static_cast<std::int64_t>(pendants[i]) + (i > 0) + (i + 1 < m);
  };
  Counts c;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t d = deg(i);
    if (d < 2) continue;
    const std::int64_t left = i > 0 ? deg(i - 1) - 1 : 0;
    const std::int64_t right = i + 1 < m ? deg(i + 1) - 1 : 0;
    c.stars += choose4(d);
    c.paths += left * right;
    c.wyes += choose2(d - 1) * (left + right);
  }
  return c;
}

Counts adjacency_counts(const std::vector<std::vector<std::size_t>>& adj) {
  Counts c;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const auto d = static_cast<std::int64_t>(adj[v].size());
    if (d < 2) continue;
    std::int64_t sum = 0, sum_sq = 0;
    for (auto u : adj[v]) {
      const auto a = static_cast<std::int64_t>(adj[u].size()) - 1;
      sum += a;
      sum_sq += a * a;
    }
    c.stars += choose4(d);
    c.paths += (sum * sum - sum_sq) / 2;
    c.wyes += choose2(d - 1) * sum;
  }
  return c;
}

struct Score {
  std::int64_t gap = 0;        // Y - 9S - P
  std::int64_t shortfall = 0;  // target - min(P, S, Y), floored at 0
  std::int64_t smallest = 0;

  double cost() const { return 4.0 * static_cast<double>(std::llabs(gap)) + static_cast<double>(shortfall); }
  bool solved() const { return gap == 0 && shortfall == 0; }
};

Score score_of(const Counts& c, std::int64_t target) {
  Score s;
  s.gap = c.wyes - 9 * c.stars - c.paths;
  s.smallest = std::min({c.paths, c.stars, c.wyes});
  s.shortfall = std::max<std::int64_t>(0, target - s.smallest);
  return s;
}

// Lexicographic preference: smaller |gap|, then larger min(P, S, Y).
bool better(const Score& a, const Score& b) {
  if (std::llabs(a.gap) != std::llabs(b.gap)) return std::llabs(a.gap) < std::llabs(b.gap);
  return a.smallest > b.smallest;
}

constexpr std::size_t kMaxPendants = 24;

Tree caterpillar_search(const SearchOptions& opt, std::uint64_t& moves) {
  std::mt19937_64 rng(opt.seed);
  const auto target = static_cast<std::int64_t>(opt.target);
  std::vector<std::size_t> state(std::max<std::size_t>(1, opt.target + 4), 2);
  Score current = score_of(caterpillar_counts(state), target);
  auto best = state;
  Score best_score = current;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double t0 = 8.0;
  for (moves = 0; moves < opt.budget && !best_score.solved(); ++moves) {
    auto candidate = state;
    const std::size_t m = candidate.size();
    switch (rng() % 5) {
      case 0:
      case 1: {
        auto& p = candidate[rng() % m];
        if (p < kMaxPendants) ++p;
        break;
      }
      case 2: {
        auto& p = candidate[rng() % m];
        if (p > 0) --p;
        break;
      }
      case 3: {
        const std::size_t fresh = rng() % 4;
        if (rng() & 1) candidate.push_back(fresh);
        else candidate.insert(candidate.begin(), fresh);
        break;
      }
      default:
        if (m > 1) {
          if (rng() & 1) candidate.pop_back();
          else candidate.erase(candidate.begin());
        }
        break;
    }
    const Score next = score_of(caterpillar_counts(candidate), target);
    const double temperature = t0 * (1.0 - static_cast<double>(moves) / static_cast<double>(opt.budget)) + 1e-3;
    const double delta = next.cost() - current.cost();
    if (delta <= 0 || unit(rng) < std::exp(-delta / temperature)) {
      state = std::move(candidate);
      current = next;
      if (better(current, best_score)) {
        best = state;
        best_score = current;
      }
    }
  }
  return caterpillar(best);
}

Tree general_search(const SearchOptions& opt, std::uint64_t& moves) {
  std::mt19937_64 rng(opt.seed);
  const auto target = static_cast<std::int64_t>(opt.target);
  // Start from the caterpillar seed and perturb by leaf moves anywhere.
  std::vector<std::vector<std::size_t>> adj;
  {
    Tree start = caterpillar(std::vector<std::size_t>(std::max<std::size_t>(1, opt.target + 4), 2));
    adj.resize(start.size());
    for (Vertex v = 0; v < start.size(); ++v) {
      auto nb = start.neighbors(v);
      adj[v].assign(nb.begin(), nb.end());
    }
  }
  auto remove_vertex = [](std::vector<std::vector<std::size_t>>& g, std::size_t leaf) {
    // Swap the leaf with the last vertex, then drop it.
    const std::size_t last = g.size() - 1;
    const std::size_t parent = g[leaf][0];
    std::erase(g[parent], leaf);
    if (leaf != last) {
      for (auto u : g[last]) std::replace(g[u].begin(), g[u].end(), last, leaf);
      g[leaf] = std::move(g[last]);
    }
    g.pop_back();
  };

  Score current = score_of(adjacency_counts(adj), target);
  auto best = adj;
  Score best_score = current;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double t0 = 8.0;
  for (moves = 0; moves < opt.budget && !best_score.solved(); ++moves) {
    auto candidate = adj;
    const std::size_t n = candidate.size();
    if (rng() % 2 == 0 || n <= 2) {
      const std::size_t at = rng() % n;
      candidate.push_back({at});
      candidate[at].push_back(n);
    } else {
      const std::size_t v = rng() % n;
      if (candidate[v].size() == 1) remove_vertex(candidate, v);
    }
    const Score next = score_of(adjacency_counts(candidate), target);
    const double temperature = t0 * (1.0 - static_cast<double>(moves) / static_cast<double>(opt.budget)) + 1e-3;
    const double delta = next.cost() - current.cost();
    if (delta <= 0 || unit(rng) < std::exp(-delta / temperature)) {
      adj = std::move(candidate);
      current = next;
      if (better(current, best_score)) {
        best = adj;
        best_score = current;
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < best.size(); ++v)
    for (auto u : best[v])
      if (v < u) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u)});
  return Tree::from_edges(best.size(), edges);
}

}  // namespace

SearchResult search_equality_trees(const SearchOptions& options) {
  std::uint64_t moves = 0;
  Tree tree = options.moves == MoveSet::kCaterpillar ? caterpillar_search(options, moves)
                                                     : general_search(options, moves);
  auto counts = profile5_fast(tree);
  const BigInt target = options.target;
  const bool converged = counts.wyes == 9 * counts.stars + counts.paths && counts.paths >= target &&
                         counts.stars >= target && counts.wyes >= target;
  return {std::move(tree), std::move(counts), converged, moves};
}

}  // namespace treeprof
