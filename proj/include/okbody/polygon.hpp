#pragma once

#include <array>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

using QPoint = std::array<Rat, 2>;

// Convex polygon with vertices in counterclockwise order, starting from the
// lexicographically smallest vertex, collinear points removed.
struct Polygon {
  std::vector<QPoint> vertices;

  bool operator==(const Polygon&) const = default;
};

// Convex hull of a point set in canonical form.
Polygon make_polygon(std::vector<QPoint> points);

Rat polygon_area(const Polygon& p);

Polygon scale(const Polygon& p, const Rat& k);

bool polygon_is_integral(const Polygon& p);

// Boundary lattice point count of an integral polygon (sum of edge gcds).
Int boundary_lattice_points(const Polygon& p);

}  // namespace okb
