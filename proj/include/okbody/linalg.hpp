#pragma once

#include <optional>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Int>;

Rat dot(const QVec& a, const QVec& b);

// Solves A x = b exactly; nullopt when A is singular.
std::optional<QVec> solve_linear(QMat a, QVec b);

int rank_of(QMat a);

QVec to_qvec(const IVec& v);

// Divide by the gcd of the entries; direction is preserved.
IVec primitive(IVec v);

// Clear denominators and reduce to a primitive integer vector.
IVec primitive(const QVec& v);

}  // namespace okb
