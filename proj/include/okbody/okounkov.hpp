#pragma once

#include <vector>

#include "okbody/polygon.hpp"
#include "okbody/zariski.hpp"

namespace okb {

struct FlagSpec {
  DivisorClass curve;
  // Only the general point is supported; ord_P of restricted negative parts
  // vanishes and alpha is identically zero.
};

struct Breakpoint {
  Rat t;
  Rat beta;
  // negative-part support of D - tC on the chamber starting at t
  std::vector<DivisorClass> support;
};

struct OkounkovPolygon {
  Rat nu;
  Rat mu;
  std::vector<Breakpoint> breakpoints;  // from t = nu to t = mu inclusive
  Polygon polygon;                      // vertices after collinear elimination

  Rat beta_at(const Rat& t) const;
};

// sup{ t >= 0 : D - tC effective }, as an exact LP optimum.
Rat mu_bound(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c);

// Coefficient of C in the negative part of D.
Rat nu_start(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c);

// Chamber walk along D - tC for a flag (C, general point).
OkounkovPolygon okounkov_polygon(const SurfaceModel& s, const QDivisor& d,
                                 const FlagSpec& flag);

// Newton-Okounkov segment of an effective non-big divisor, via the global
// body fiber. Requires -K - C big and nef.
Polygon numerical_fiber(const SurfaceModel& s, const QDivisor& d, const FlagSpec& flag);

}  // namespace okb
