#include "treeprof/hull.hpp"

#include <algorithm>

namespace treeprof {
namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<Point2> hull2d(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<Point2> h(2 * points.size());
  std::size_t m = 0;
  for (const auto& p : points) {
    while (m >= 2 && cross(h[m - 2], h[m - 1], p) <= 0) --m;
    h[m++] = p;
  }
  const std::size_t lower = m + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (m >= lower && cross(h[m - 2], h[m - 1], *it) <= 0) --m;
    h[m++] = *it;
  }
  h.resize(m - 1);
  return h;
}

Rational doubled_area(const std::vector<Point2>& polygon) {
  Rational acc = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % polygon.size()];
    acc += a.x * b.y - a.y * b.x;
  }
  return acc;
}

bool contains(const std::vector<Point2>& hull, const Point2& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], p) != 0) return false;
    auto [xlo, xhi] = std::minmax(hull[0].x, hull[1].x);
    auto [ylo, yhi] = std::minmax(hull[0].y, hull[1].y);
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
  }
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

}  // namespace treeprof
