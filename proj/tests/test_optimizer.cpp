#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "okbody/optimizer.hpp"
#include "okbody/reference_data.hpp"

using namespace okb;

namespace {

QDivisor qd(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return QDivisor(std::move(v));
}

std::vector<IVec> nef_part(const OptimizationResult& r) {
  std::vector<IVec> out;
  for (const auto& c : r.optimal_curves)
    if (c.kind == CurveKind::Nef) out.push_back(c.cls.coords);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> neg_part(const OptimizationResult& r) {
  std::vector<IVec> out;
  for (const auto& c : r.optimal_curves)
    if (c.kind == CurveKind::Negative) out.push_back(c.cls.coords);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("candidate enumeration") {
  SurfaceModel x5 = make_surface("X5");
  CHECK(enumerate_nef_candidates(x5, anticanonical(x5), 0).empty());

  auto cands = enumerate_nef_candidates(x5, anticanonical(x5), 2);
  CHECK(!cands.empty());
  for (const auto& xi : cands) {
    CHECK(is_nef(x5, QDivisor(xi)));
    Rat deg = intersect(x5, anticanonical(x5), xi);
    CHECK(deg > 0);
    CHECK(deg <= 2);
  }
  // H - E_1 has -K degree 2 and must appear
  CHECK(std::find(cands.begin(), cands.end(), DivisorClass{1, -1, 0, 0, 0, 0}) != cands.end());

  auto c2 = enumerate_nef_candidates(x5, qd({5, -1, -1, -2, -2, -3}), 6);
  CHECK(std::find(c2.begin(), c2.end(), DivisorClass{1, 0, 0, -1, 0, 0}) != c2.end());
}

TEST_CASE("enumeration agrees with a plain box sweep") {
  // independent oracle: full scan of the nef lattice box, no recursive pruning
  SurfaceModel x5 = make_surface("X5");
  QDivisor p = anticanonical(x5);
  const Rat bound(2);
  auto cands = enumerate_nef_candidates(x5, p, bound);
  std::sort(cands.begin(), cands.end());

  std::vector<DivisorClass> brute;
  // nef classes satisfy xi.(2H - sum E) >= 0 and xi.(H-Ei-Ej) >= 0, so
  // -K.xi <= 2 forces 0 <= xi_0 <= 2 and -xi_0 <= xi_i <= 0
  for (int a = 0; a <= 2; ++a)
    for (int b1 = -a; b1 <= 0; ++b1)
      for (int b2 = -a; b2 <= 0; ++b2)
        for (int b3 = -a; b3 <= 0; ++b3)
          for (int b4 = -a; b4 <= 0; ++b4)
            for (int b5 = -a; b5 <= 0; ++b5) {
              DivisorClass xi{a, b1, b2, b3, b4, b5};
              if (!is_nef(x5, QDivisor(xi))) continue;
              Rat deg = intersect(x5, p, xi);
              if (deg <= 0 || deg > bound) continue;
              brute.push_back(xi);
            }
  std::sort(brute.begin(), brute.end());
  CHECK(cands == brute);
}

TEST_CASE("negative curves always reach the optimum") {
  SurfaceModel x5 = make_surface("X5");
  auto r = optimize(x5, QDivisor(to_qvec(refdata::x5_table()[1].divisor)));
  std::vector<IVec> neg = neg_part(r);
  std::vector<IVec> all;
  for (const auto& c : x5.negative_curves) all.push_back(c.coords);
  std::sort(all.begin(), all.end());
  CHECK(neg == all);
}

TEST_CASE("published row with no nef optimizers") {
  SurfaceModel x5 = make_surface("X5");
  const auto& row = refdata::x5_table()[2];
  auto r = optimize(x5, QDivisor(to_qvec(row.divisor)));
  CHECK(r.optimum == row.min_area);
  CHECK(nef_part(r).empty());
  CHECK(r.induces_normal);
  CHECK(r.hilbert_second == r.optimum);
}

TEST_CASE("published row with nef optimizers") {
  SurfaceModel x5 = make_surface("X5");
  const auto& row = refdata::x5_table()[3];
  auto r = optimize(x5, QDivisor(to_qvec(row.divisor)));
  CHECK(r.optimum == row.min_area);
  CHECK(nef_part(r) == row.nef);
}

TEST_CASE("soundness: every reported curve attains the optimum") {
  SurfaceModel x5 = make_surface("X5");
  QDivisor d = QDivisor(to_qvec(refdata::x5_table()[3].divisor));
  auto r = optimize(x5, d);
  QDivisor p = zariski_decompose(x5, d).positive;
  for (const auto& c : r.optimal_curves)
    CHECK(normalized_surface_area(x5, p, c.cls) == r.optimum);
}

TEST_CASE("completeness against an unpruned sweep") {
  // every integral class xi with P.xi <= optimum whose primitive part is
  // irreducible is swept; the optimal subset must match optimize()
  SurfaceModel x5 = make_surface("X5");
  for (int row_idx : {1, 3}) {
    const auto& row = refdata::x5_table()[row_idx];
    QDivisor d = QDivisor(to_qvec(row.divisor));
    auto r = optimize(x5, d);
    QDivisor p = zariski_decompose(x5, d).positive;
    const Rat budget = r.optimum;

    std::vector<IVec> brute;
    // nef box: xi_0 bounded through the extremal nef rays (P.xi >= min P.rho
    // per unit of the ray coefficients)
    for (const auto& xi : enumerate_nef_candidates(x5, p, budget)) {
      if (!is_irreducible_class(x5, DivisorClass(primitive(xi.coords)))) continue;
      if (normalized_surface_area(x5, p, xi) == r.optimum) brute.push_back(xi.coords);
    }
    for (const auto& c : x5.negative_curves)
      if (normalized_surface_area(x5, p, c) == r.optimum) brute.push_back(c.coords);
    std::sort(brute.begin(), brute.end());

    std::vector<IVec> got;
    for (const auto& c : r.optimal_curves) got.push_back(c.cls.coords);
    std::sort(got.begin(), got.end());
    CHECK(got == brute);
  }
}

TEST_CASE("determinism") {
  SurfaceModel x5 = make_surface("X5");
  QDivisor d = QDivisor(to_qvec(refdata::x5_table()[1].divisor));
  auto a = optimize(x5, d);
  auto b = optimize(x5, d);
  CHECK(a.optimal_curves == b.optimal_curves);
  CHECK(a.optimum == b.optimum);
  CHECK(std::is_sorted(a.optimal_curves.begin(), a.optimal_curves.end()));
}

TEST_CASE("domain errors") {
  SurfaceModel x7 = make_surface("X7");
  QVec v(8, Rat(0));
  v[0] = 3;
  for (int i = 1; i < 8; ++i) v[i] = -1;
  CHECK_THROWS_AS((void)optimize(x7, QDivisor(v)), TheoryLimitedError);
  SurfaceModel x5 = make_surface("X5");
  CHECK_THROWS_AS((void)optimize(x5, qd({1, -1, 0, 0, 0, 0})), DomainError);  // not big
}
