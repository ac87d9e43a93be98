#include "okbody/polygon.hpp"

#include <algorithm>
#include <cassert>

namespace okb {

namespace {

Rat cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

Polygon make_polygon(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon out;
  if (pts.size() <= 2) {
    out.vertices = std::move(pts);
    return out;
  }
  // Andrew monotone chain; strict turns only, so collinear points drop out.
  std::vector<QPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // closes at the starting vertex
  out.vertices = std::move(hull);
  return out;
}

Rat polygon_area(const Polygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return Rat(0);
  Rat twice = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

Polygon scale(const Polygon& p, const Rat& k) {
  Polygon out = p;
  for (auto& v : out.vertices) {
    v[0] *= k;
    v[1] *= k;
  }
  return out;
}

bool polygon_is_integral(const Polygon& p) {
  for (const auto& v : p.vertices)
    if (!is_integral(v[0]) || !is_integral(v[1])) return false;
  return true;
}

Int boundary_lattice_points(const Polygon& p) {
  assert(polygon_is_integral(p));
  const auto& v = p.vertices;
  if (v.size() == 1) return 1;
  if (v.size() == 2)
    return int_gcd(numerator(Rat(v[1][0] - v[0][0])), numerator(Rat(v[1][1] - v[0][1]))) + 1;
  Int b = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& c = v[(i + 1) % v.size()];
    b += int_gcd(numerator(Rat(c[0] - a[0])), numerator(Rat(c[1] - a[1])));
  }
  return b;
}

}  // namespace okb
