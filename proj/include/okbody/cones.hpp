#pragma once

#include <optional>
#include <vector>

#include "okbody/lattice.hpp"
#include "okbody/simplex.hpp"

namespace okb {

struct RationalCone {
  int dim = 0;
  std::vector<IVec> rays;    // primitive extremal generators
  std::vector<IVec> facets;  // primitive inner normals, f.x >= 0
};

// Extreme rays and lineality of { x : a.x >= 0 for all a in normals }.
struct DualDescription {
  std::vector<IVec> lineality;
  std::vector<IVec> rays;
};
DualDescription dual_cone(const std::vector<IVec>& normals, int dim);

// Minimal facet and extremal-ray description of Cone(rays). Cones that are
// not full dimensional get their span cut out by facet pairs +/-l.
RationalCone dual_and_minimize(const std::vector<IVec>& rays, int dim);

struct HilbertCheckResult {
  bool verified = false;
  // a cone lattice point within the degree bound that is not an
  // N-combination of the generators (empty when verified)
  std::vector<IVec> missing;
};

// Verifies, up to grading value degree_bound, that every lattice point of the
// cone is a nonnegative integer combination of the generators. The grading
// must be strictly positive on the cone minus the origin; when absent one is
// found by LP.
HilbertCheckResult hilbert_basis_check(const RationalCone& cone,
                                       const std::vector<IVec>& generators,
                                       const Int& degree_bound,
                                       std::optional<IVec> grading = std::nullopt);

// Extremal rays of the nef cone (dual of the effective cone).
std::vector<DivisorClass> nef_extremal_rays(const SurfaceModel& s);

struct LinearConstraint {
  QVec coeffs;
  Rat rhs;
  int sense;  // 0 ==, +1 >=, -1 <=
};

// All integer points of a bounded polyhedron, by recursive coordinate fixing
// with exact LP bounds.
std::vector<IVec> enumerate_lattice_points(size_t nvars,
                                           const std::vector<LinearConstraint>& cs);

// Strictly positive integral grading for a pointed cone, or nullopt.
std::optional<IVec> find_positive_grading(const RationalCone& cone);

}  // namespace okb
