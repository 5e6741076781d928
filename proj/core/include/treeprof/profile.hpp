#pragma once

#include "treeprof/census.hpp"
#include "treeprof/enumerate.hpp"
#include "treeprof/numeric.hpp"
#include "treeprof/tree.hpp"

#include <cstddef>
#include <vector>

namespace treeprof {

/// Exact k-profile: per-type copy counts in TypeCatalog order, their total
/// Z_k, and the normalized vector (empty when z == 0).
struct KProfile {
  std::size_t k = 0;
  std::vector<BigInt> counts;
  BigInt z;
  std::vector<Rational> p;

  bool defined() const { return z > 0; }
  /// Path and star fractions; throws UndefinedProfileError when z == 0.
  const Rational& path_fraction() const;
  const Rational& star_fraction() const;
};

/// Counts of 5-vertex paths, stars and wyes.
struct Profile5 {
  BigInt paths;
  BigInt stars;
  BigInt wyes;

  friend bool operator==(const Profile5&, const Profile5&) = default;
};

enum class CopyConvention {
  /// Vertex subsets of the host inducing a copy of the pattern.
  kSubsets,
  /// Injective homomorphisms, i.e. subsets times |Aut(pattern)|.
  kInjectiveHomomorphisms,
};

BigInt count_copies(const Tree& pattern, const Tree& host,
                    CopyConvention convention = CopyConvention::kSubsets);

/// One enumeration pass classifying every connected k-subset.
KProfile k_profile(const Tree& t, std::size_t k, CensusOptions options = {});
KProfile k_profile(const Tree& t, const TypeCatalog& catalog, CensusOptions options = {});

/// (P, S, Y) from vertex-centered degree formulas:
///   S(v) = C(d_v, 4)
///   P(v) = sum over unordered neighbor pairs {u, w} of (d_u - 1)(d_w - 1)
///   Y(v) = C(d_v - 1, 2) * sum over neighbors u of (d_u - 1)
Profile5 profile5_fast(const Tree& t);

/// Reads (P, S, Y) off a k = 5 profile.
Profile5 profile5_of(const KProfile& profile);

/// Number of k-vertex stars: n for k = 1, n - 1 for k = 2, else sum C(d_v, k-1).
BigInt star_count(const Tree& t, std::size_t k);

/// R_k(t) = Z_k(t) - star_count(t, k). Requires k >= 2.
BigInt nonstar_count(const Tree& t, std::size_t k);

}  // namespace treeprof
