#pragma once

#include "treeprof/numeric.hpp"
#include "treeprof/profile.hpp"
#include "treeprof/tree.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <variant>

namespace treeprof {

/// Exact integer or double-precision side of an inequality.
using BoundValue = std::variant<BigInt, double>;

std::string to_string(const BoundValue& value);
double to_double(const BoundValue& value);

struct TreeSummary {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  /// degree -> number of vertices with that degree
  std::map<std::size_t, std::size_t> degree_histogram;
};

TreeSummary summarize(const Tree& t);

/// lhs <= rhs evaluated on one tree (or one profile).
///
/// Exact sides hold iff slack >= 0. Floating sides hold iff
/// slack >= -kRelativeTolerance * max(1, |rhs|).
struct BoundReport {
  std::string name;
  BoundValue lhs;
  BoundValue rhs;
  BoundValue slack;
  bool holds = false;
  TreeSummary tree;
  /// Which inequality produced lhs/rhs when a check covers several.
  std::string detail;
};

inline constexpr double kRelativeTolerance = 1e-6;
inline constexpr double kEuler = 2.718281828459045235360287471352662498;

/// Exponent (k-2 + sqrt((k-2)^2 + 4(k-2))) / 2 of the non-star bound; the
/// positive root of x^2 = (k-2)(x + 1). Lies strictly in (k-2, k-1).
struct Epsilon {
  std::size_t k;
  double value;

  /// Requires k >= 3.
  static Epsilon for_order(std::size_t k);
};

/// Y <= 9S + P + 6.
BoundReport check_main_theorem(const Tree& t);
/// Y <= 36S + P + 4.
BoundReport check_bl_theorem(const Tree& t);
/// R_k <= e (k-1)! sum_{d_v >= 2} d_v^eps. Requires k >= 4.
BoundReport check_nonstar_bound(const Tree& t, std::size_t k);
/// Y <= 2 sum_v d_v^(2 + sqrt 3).
BoundReport check_wye_degree_bound(const Tree& t);

/// Both sides of the gluing sandwich for every type and for Z_k on
/// glue(s, t, k) with the default leaves:
///   c_i(S) + c_i(T) <= c_i(S # T) <= c_i(S) + c_i(T) + (k-2)! (D(S)^(k-3) + D(T)^(k-3))
/// The report carries the tightest of the 2(N_k + 1) inequalities.
BoundReport check_gluing_sandwich(const Tree& s, const Tree& t, std::size_t k);

/// Lower bound on the star fraction in terms of the path fraction:
///   k >= 6: p2 >= 1 - e (k-1)! (k-1)^eps p1^(1 - eps/(k-1))
///   k == 5: p2 >= 1 - p1 - 2 * 4^(2+sqrt3) * p1^((2-sqrt3)/4)
/// Stated for limit profiles; on a finite tree the slack is informative only.
/// Throws UndefinedProfileError when z == 0, PreconditionError when k < 5.
BoundReport check_theorem2(const KProfile& profile);

/// Closed form Y of depth_two_tree(d, c): d (C(d-1,2)(c-1) + C(c-1,2)(d-1)).
BigInt depth_two_wyes(std::size_t root_degree, std::size_t child_degree);

}  // namespace treeprof
