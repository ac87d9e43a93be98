#pragma once

#include <string>
#include <vector>

#include "okbody/cones.hpp"
#include "okbody/zariski.hpp"

namespace okb {

struct FlagSpec;  // okounkov.hpp

struct GlobalBody {
  SurfaceModel surface;
  DivisorClass flag_curve;
  int ambient_dim = 0;  // 2 + rank; coordinates (nu1, nu2, H, E_1, ...)
  std::vector<IVec> raw_generators;
  RationalCone cone;
  Int hilbert_verified_to = 0;
  // filled by global_semigroup_generators; cone.rays plus any DP witnesses
  std::vector<IVec> semigroup_generators;
};

// Zariski chamber generators whose negative part avoids C: the nef extremal
// rays plus every negative curve other than C.
std::vector<DivisorClass> chamber_generators(const SurfaceModel& s, const DivisorClass& c);

// Global Newton-Okounkov cone for a negative flag curve and a general point.
GlobalBody global_body(const SurfaceModel& s, const FlagSpec& flag);

struct SemigroupGenerators {
  std::vector<IVec> generators;
  bool verified = false;
  Int verified_to = 0;
};

// Extremal rays, Hilbert-checked to the degree bound; DP-discovered missing
// lattice generators are appended when the rays do not suffice. The grading
// defaults to global_grading(body.surface).
SemigroupGenerators global_semigroup_generators(GlobalBody& body, const Int& degree_bound,
                                                std::optional<IVec> grading = std::nullopt);

struct CoxGenerator {
  DivisorClass cls;
  std::string description;
};

std::vector<CoxGenerator> cox_generators_report(const SurfaceModel& s, const GlobalBody& body);

// The natural grading: pairing with -K plus the first valuation coordinate.
IVec global_grading(const SurfaceModel& s);

}  // namespace okb
