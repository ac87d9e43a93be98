#pragma once

#include <vector>

#include "okbody/lattice.hpp"

namespace okb {

struct ZariskiDecomposition {
  QDivisor positive;
  std::vector<std::pair<DivisorClass, Rat>> negative;  // curve, coefficient > 0

  QDivisor negative_part(int rank) const;
};

// Unique decomposition D = P + N of a pseudo-effective rational divisor.
// Throws NotEffectiveError when D is not pseudo-effective.
ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const QDivisor& d);

// Negative curves orthogonal to a nef divisor.
std::vector<DivisorClass> null_set(const SurfaceModel& s, const QDivisor& p);

// Support of the negative part.
std::vector<DivisorClass> neg_set(const SurfaceModel& s, const QDivisor& d);

// b^(rho-1) with b = max |C^2| over negative curves; 1 certifies integral
// Zariski decompositions.
Int integrality_bound(const SurfaceModel& s);

// vol(D) = P^2 of the positive part; big iff vol > 0.
Rat volume(const SurfaceModel& s, const QDivisor& d);
bool is_big(const SurfaceModel& s, const QDivisor& d);

}  // namespace okb
