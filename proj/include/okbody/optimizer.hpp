#pragma once

#include <vector>

#include "okbody/ehrhart.hpp"

namespace okb {

enum class CurveKind { Negative, Nef };

struct OptimalCurve {
  DivisorClass cls;
  CurveKind kind;

  auto operator<=>(const OptimalCurve&) const = default;
};

struct OptimizationResult {
  Rat optimum;                            // minimal normalized surface area
  std::vector<OptimalCurve> optimal_curves;  // sorted lexicographically
  Rat hilbert_second;                     // P.(-K), the table's second coefficient
  bool induces_normal;                    // optimum == hilbert_second
};

// All integral nef classes xi with 0 < P.xi <= bound.
std::vector<DivisorClass> enumerate_nef_candidates(const SurfaceModel& s, const QDivisor& p,
                                                   const Rat& bound);

// Flag search: minimal normalized surface area over negative curves and
// bounded nef irreducible classes, on the positive part of D.
OptimizationResult optimize(const SurfaceModel& s, const QDivisor& d);

}  // namespace okb
