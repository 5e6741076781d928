#pragma once

#include "treeprof/constructions.hpp"
#include "treeprof/hull.hpp"
#include "treeprof/numeric.hpp"
#include "treeprof/tree.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace treeprof {

/// Limit of the 5-profile of T_n^D as n grows, from exact per-period count
/// increments (path, star, wye).
struct LimitProfile {
  std::vector<std::size_t> pendants;
  std::size_t extra_pendants = 0;
  std::array<Rational, 3> p;
  std::array<BigInt, 3> per_period;

  Point2 projection() const { return {p[0], p[1]}; }
};

/// Throws PreconditionError on an empty pattern and InternalError if the
/// increments fail to stabilize.
LimitProfile limit_profile(std::span<const std::size_t> pendants, std::size_t extra_pendants = 0);

/// Y <= star_coef * S + path_coef * P + c in count space.
struct FacetLine {
  Rational star_coef;
  Rational path_coef;
};

/// The count-space line y = a_S s + a_P p through both profiles' homogeneous
/// (p, s, y) coordinates. Throws PreconditionError when they are degenerate.
FacetLine facet_from_profiles(const LimitProfile& a, const LimitProfile& b);

/// y - a_S s - a_P p for a normalized point; zero on the facet.
Rational facet_residual(const FacetLine& line, const std::array<Rational, 3>& p);

struct FacetConstantEstimate {
  /// max over the corpus of Y - a_S S - a_P P. A lower bound on the
  /// universal constant of the inequality, never its value.
  Rational max_excess;
  double approx = 0;
  std::size_t witness = 0;
};

/// Requires a non-empty corpus.
FacetConstantEstimate estimate_facet_constant(const FacetLine& line, std::span<const Tree> corpus);

struct Family {
  std::string label;
  std::vector<std::size_t> pendants;
};

/// (d) for d in 0..3.
std::vector<Family> simple_families();
/// The full list: (d), d <= 3; (0,0,3,4,4,3); (0,0,d,d+2,d+2,d) for d in 3..5;
/// (0,0,d,d+1,d) for d in 4..6; (0,0,d,d) for 6 <= d <= d_max.
std::vector<Family> default_families(std::size_t d_max = 12);

/// Limit of the (0,0,d,d) profiles as d grows, from the leading terms of the
/// per-period counts (exact polynomial fit in d).
std::array<Rational, 3> wide_pair_accumulation_point();

struct RegionPoint {
  std::string label;
  std::array<Rational, 3> p;
  bool accumulation = false;
};

struct Region {
  std::vector<RegionPoint> points;
  std::vector<Point2> simple_hull;
  std::vector<Point2> full_hull;
};

/// Limit profiles for `families` (classic offset 0) plus the accumulation
/// point when `with_accumulation`. Both hulls are returned; the simple hull
/// covers only the single-entry (d) families.
Region build_region(const std::vector<Family>& families, bool with_accumulation = true);

std::string region_csv(const Region& region);
std::string region_svg(const Region& region);

/// Writes both files; throws std::runtime_error when a path is unwritable.
void emit_region_plot(const Region& region, const std::string& csv_path, const std::string& svg_path);

}  // namespace treeprof
