#include "okbody/optimizer.hpp"

#include <algorithm>

#include "okbody/cones.hpp"

namespace okb {

std::vector<DivisorClass> enumerate_nef_candidates(const SurfaceModel& s, const QDivisor& p,
                                                   const Rat& bound) {
  if (bound <= 0) return {};
  std::vector<LinearConstraint> cs;
  for (const auto& c : s.eff_generators) {
    QVec row(s.rank);
    row[0] = Rat(c.coords[0]);
    for (int i = 1; i < s.rank; ++i) row[i] = -Rat(c.coords[i]);
    cs.push_back({std::move(row), Rat(0), +1});  // xi . C >= 0
  }
  QVec prow(s.rank);
  prow[0] = p.coords[0];
  for (int i = 1; i < s.rank; ++i) prow[i] = -p.coords[i];
  cs.push_back({prow, bound, -1});  // P . xi <= bound
  cs.push_back({prow, Rat(1), +1});  // excludes xi = 0 (P big nef, xi nef)

  std::vector<DivisorClass> out;
  for (auto& v : enumerate_lattice_points(s.rank, cs)) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

OptimizationResult optimize(const SurfaceModel& s, const QDivisor& d) {
  if (s.kind == SurfaceKind::XR && s.r > 6)
    throw TheoryLimitedError("optimizer requires the irreducibility criterion: " + s.name());
  if (!is_big(s, d)) throw DomainError("optimize requires a big divisor");

  const QDivisor p = zariski_decompose(s, d).positive;

  struct Scored {
    DivisorClass cls;
    CurveKind kind;
    Rat area;
  };
  std::vector<Scored> scored;
  Rat optimum;
  bool have = false;
  for (const auto& c : s.negative_curves) {
    Rat a = normalized_surface_area(s, p, c);
    scored.push_back({c, CurveKind::Negative, a});
    if (!have || a < optimum) {
      optimum = a;
      have = true;
    }
  }
  for (const auto& xi : enumerate_nef_candidates(s, p, optimum)) {
    // the published optimal sets contain multiples of conic classes, so the
    // irreducibility test is applied to the primitive part
    if (!is_irreducible_class(s, DivisorClass(primitive(xi.coords)))) continue;
    Rat a = normalized_surface_area(s, p, xi);
    scored.push_back({xi, CurveKind::Nef, a});
    if (a < optimum) optimum = a;
  }

  OptimizationResult result;
  result.optimum = optimum;
  for (auto& sc : scored)
    if (sc.area == optimum) result.optimal_curves.push_back({std::move(sc.cls), sc.kind});
  std::sort(result.optimal_curves.begin(), result.optimal_curves.end());
  result.optimal_curves.erase(
      std::unique(result.optimal_curves.begin(), result.optimal_curves.end()),
      result.optimal_curves.end());
  result.hilbert_second = intersect(s, p, anticanonical(s));
  result.induces_normal = result.optimum == result.hilbert_second;
  return result;
}

}  // namespace okb
