#include "treeprof/profile.hpp"

#include "treeprof/canonical.hpp"
#include "treeprof/errors.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace treeprof {

const Rational& KProfile::path_fraction() const {
  if (!defined()) throw UndefinedProfileError("profile undefined: tree has no k-vertex subtrees");
  return p[TypeCatalog::kPathIndex];
}

const Rational& KProfile::star_fraction() const {
  if (!defined()) throw UndefinedProfileError("profile undefined: tree has no k-vertex subtrees");
  return p[k >= 4 ? 1 : 0];
}

KProfile k_profile(const Tree& t, const TypeCatalog& catalog, CensusOptions options) {
  const std::size_t k = catalog.order();
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(catalog.size(), 0));

  auto work = [&](unsigned slot) {
    auto& counts = partial[slot];
    std::function<void(std::span<const Vertex>)> visit;
    if (catalog.size() == 1) {
      visit = [&](std::span<const Vertex>) { ++counts[0]; };
    } else {
      visit = [&](std::span<const Vertex> subset) {
        auto index = catalog.index_of(canonicalize_subset(t, subset));
        if (!index) throw InternalError("census produced a subtree missing from the catalog");
        ++counts[*index];
      };
    }
    for (std::size_t r = slot; r < t.size(); r += jobs)
      for_each_connected_subset_rooted(t, k, static_cast<Vertex>(r), visit);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }

  KProfile out;
  out.k = k;
  out.counts.assign(catalog.size(), BigInt(0));
  for (const auto& part : partial)
    for (std::size_t i = 0; i < part.size(); ++i) out.counts[i] += part[i];
  out.z = 0;
  for (const auto& c : out.counts) out.z += c;
  if (out.z > 0) {
    out.p.reserve(out.counts.size());
    for (const auto& c : out.counts) out.p.emplace_back(c, out.z);
  }
  return out;
}

KProfile k_profile(const Tree& t, std::size_t k, CensusOptions options) {
  if (k == 0) throw PreconditionError("profile order must be at least 1");
  return k_profile(t, TypeCatalog(k), options);
}

BigInt count_copies(const Tree& pattern, const Tree& host, CopyConvention convention) {
  const std::size_t k = pattern.size();
  const auto target = canonicalize(pattern);
  std::uint64_t hits = 0;
  if (k <= host.size()) {
    for_each_connected_subset(host, k, [&](std::span<const Vertex> subset) {
      if (canonicalize_subset(host, subset) == target) ++hits;
    });
  }
  BigInt copies = hits;
  if (convention == CopyConvention::kInjectiveHomomorphisms) copies *= automorphism_count(pattern);
  return copies;
}

Profile5 profile5_fast(const Tree& t) {
  const auto deg = t.degrees();
  Profile5 out;
  for (Vertex v = 0; v < t.size(); ++v) {
    const std::uint64_t d = deg[v];
    if (d < 2) continue;
    // a_u = d_u - 1 over neighbors; pairs sum = ((sum a)^2 - sum a^2) / 2
    BigInt sum = 0;
    BigInt sum_sq = 0;
    for (Vertex u : t.neighbors(v)) {
      const std::uint64_t a = deg[u] - 1;
      sum += a;
      sum_sq += BigInt(a) * a;
    }
    out.stars += binomial(d, 4);
    out.paths += (sum * sum - sum_sq) / 2;
    out.wyes += binomial(d - 1, 2) * sum;
  }
  return out;
}

Profile5 profile5_of(const KProfile& profile) {
  if (profile.k != 5 || profile.counts.size() != 3)
    throw PreconditionError("profile5_of needs a k = 5 profile");
  return {profile.counts[0], profile.counts[1], profile.counts[2]};
}

BigInt star_count(const Tree& t, std::size_t k) {
  if (k == 0) throw PreconditionError("star order must be at least 1");
  if (k == 1) return t.size();
  if (k == 2) return t.size() - 1;
  BigInt total = 0;
  for (auto d : t.degrees()) total += binomial(d, k - 1);
  return total;
}

BigInt nonstar_count(const Tree& t, std::size_t k) {
  if (k < 2) throw PreconditionError("non-star count needs k >= 2");
  return subtree_total(t, k) - star_count(t, k);
}

}  // namespace treeprof
