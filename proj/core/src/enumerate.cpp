#include "treeprof/enumerate.hpp"

#include "treeprof/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace treeprof {
namespace {

std::vector<Tree> grow_all(std::size_t k) {
  std::vector<Tree> level{Tree::single_vertex()};
  for (std::size_t n = 2; n <= k; ++n) {
    std::vector<Tree> next;
    std::unordered_set<CanonicalCode> seen;
    for (const Tree& t : level) {
      auto base = t.edges();
      for (Vertex v = 0; v < t.size(); ++v) {
        auto edges = base;
        edges.push_back({v, static_cast<Vertex>(t.size())});
        Tree grown = Tree::from_edges(n, edges);
        if (seen.insert(canonicalize(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t k, std::size_t limit) {
  if (k == 0) throw PreconditionError("tree order must be at least 1");
  if (limit > kMaxEnumerationLimit)
    throw CapabilityError("enumeration limit " + std::to_string(limit) + " exceeds hard cap " +
                          std::to_string(kMaxEnumerationLimit));
  if (k > limit)
    throw CapabilityError("enumerating trees on " + std::to_string(k) +
                          " vertices exceeds the configured limit " + std::to_string(limit));

  auto trees = grow_all(k);
  std::vector<std::pair<CanonicalCode, Tree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(canonicalize(t), std::move(t));

  const auto path_code = canonicalize(Tree::path(k));
  const auto star_code = canonicalize(Tree::star(k - 1));
  auto rank = [&](const CanonicalCode& c) {
    if (c == path_code) return 0;
    if (c == star_code) return 1;
    return 2;
  };
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    int ra = rank(a.first), rb = rank(b.first);
    if (ra != rb) return ra < rb;
    return a.first < b.first;
  });

  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& [code, t] : keyed) out.push_back(std::move(t));
  return out;
}

TypeCatalog::TypeCatalog(std::size_t k, std::size_t limit)
    : k_(k), types_(enumerate_trees(k, limit)) {
  codes_.reserve(types_.size());
  for (std::size_t i = 0; i < types_.size(); ++i) {
    codes_.push_back(canonicalize(types_[i]));
    index_.emplace(codes_.back(), i);
  }
}

std::optional<std::size_t> TypeCatalog::index_of(const CanonicalCode& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace treeprof
