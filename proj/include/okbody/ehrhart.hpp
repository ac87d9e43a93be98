#pragma once

#include "okbody/okounkov.hpp"
#include "okbody/polygon.hpp"

namespace okb {

// a2 k^2 + a1 k + a0
struct Poly2 {
  Rat a2, a1, a0;

  bool operator==(const Poly2&) const = default;
  Rat operator()(const Rat& k) const { return a2 * k * k + a1 * k + a0; }
  std::string str() const;
};

struct DefectReport {
  Poly2 ehrhart;  // of k0 * polygon
  Poly2 hilbert;  // of k0 * D
  Int k0;
  bool is_normal;
};

// k0 = lcm of vertex denominators; returns (k0, k0 * polygon).
std::pair<Int, Polygon> scale_to_integral(const Polygon& p);

// |k * polygon ∩ Z^2| by exact vertical-slice counting.
Int lattice_count(const Polygon& integral_polygon, const Int& k);

// Pick's theorem: area, boundary/2, 1.
Poly2 ehrhart_polynomial(const Polygon& integral_polygon);

// On the positive part P: (P.P)/2 t^2 + (P.-K)/2 t + 1.
Poly2 hilbert_polynomial(const SurfaceModel& s, const QDivisor& d);

// Boundary lattice points of the scaled-integral Okounkov polygon over k0.
Rat normalized_surface_area(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c);
Rat normalized_surface_area(const Polygon& body);

DefectReport normal_defect_report(const SurfaceModel& s, const QDivisor& d,
                                  const DivisorClass& c);

}  // namespace okb
