#pragma once

#include "treeprof/numeric.hpp"

#include <compare>
#include <vector>

namespace treeprof {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Convex hull in exact arithmetic, counterclockwise starting from the
/// lowest-x (then lowest-y) point; collinear boundary points are dropped.
std::vector<Point2> hull2d(std::vector<Point2> points);

/// Twice the signed area of the polygon.
Rational doubled_area(const std::vector<Point2>& polygon);

/// Point in or on a counterclockwise convex polygon (degenerate hulls included).
bool contains(const std::vector<Point2>& hull, const Point2& p);

}  // namespace treeprof
