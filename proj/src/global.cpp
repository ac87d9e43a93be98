#include "okbody/global.hpp"

#include <algorithm>
#include <cassert>

#include "okbody/okounkov.hpp"

namespace okb {

std::vector<DivisorClass> chamber_generators(const SurfaceModel& s, const DivisorClass& c) {
  if (std::find(s.negative_curves.begin(), s.negative_curves.end(), c) ==
      s.negative_curves.end())
    throw DomainError("flag curve must be a negative curve");
  std::vector<DivisorClass> out = nef_extremal_rays(s);
  for (const auto& cc : s.negative_curves)
    if (cc != c) out.push_back(cc);
  std::sort(out.begin(), out.end());
  return out;
}

GlobalBody global_body(const SurfaceModel& s, const FlagSpec& flag) {
  GlobalBody b;
  b.surface = s;
  b.flag_curve = flag.curve;
  b.ambient_dim = 2 + s.rank;
  auto emit = [&](Int v1, Int v2, const IVec& d) {
    IVec g;
    g.reserve(b.ambient_dim);
    g.push_back(std::move(v1));
    g.push_back(std::move(v2));
    for (const auto& x : d) g.push_back(x);
    b.raw_generators.push_back(std::move(g));
  };
  emit(1, 0, flag.curve.coords);
  for (const auto& di : chamber_generators(s, flag.curve)) {
    emit(0, 0, di.coords);
    // ord_P(N_i|C) = 0 at a general point, so the remaining generator is
    // (0, P_i.C, [D_i])
    QDivisor p = zariski_decompose(s, QDivisor(di)).positive;
    Rat pc = intersect(s, p, flag.curve);
    assert(is_integral(pc));
    emit(0, numerator(pc), di.coords);
  }
  std::sort(b.raw_generators.begin(), b.raw_generators.end());
  b.raw_generators.erase(std::unique(b.raw_generators.begin(), b.raw_generators.end()),
                         b.raw_generators.end());
  b.cone = dual_and_minimize(b.raw_generators, b.ambient_dim);
  return b;
}

IVec global_grading(const SurfaceModel& s) {
  IVec g(2 + s.rank, 0);
  g[0] = 1;
  // pairing with -K in the divisor coordinates
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.rank; ++j) g[2 + i] -= s.gram[i][j] * s.canonical.coords[j];
  return g;
}

SemigroupGenerators global_semigroup_generators(GlobalBody& body, const Int& degree_bound,
                                                std::optional<IVec> grading_in) {
  const IVec grading = grading_in ? *grading_in : global_grading(body.surface);
  SemigroupGenerators out;
  out.generators = body.cone.rays;
  HilbertCheckResult check =
      hilbert_basis_check(body.cone, out.generators, degree_bound, grading);
  out.verified = check.verified;
  while (!check.verified) {
    for (auto& m : check.missing) out.generators.push_back(std::move(m));
    check = hilbert_basis_check(body.cone, out.generators, degree_bound, grading);
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.verified_to = degree_bound;
  body.hilbert_verified_to = degree_bound;
  body.semigroup_generators = out.generators;
  return out;
}

std::vector<CoxGenerator> cox_generators_report(const SurfaceModel& s, const GlobalBody& body) {
  if (body.hilbert_verified_to <= 0 || body.semigroup_generators.empty())
    throw DomainError("semigroup generators not verified");
  std::vector<CoxGenerator> out;
  for (const auto& g : body.semigroup_generators) {
    DivisorClass cls(IVec(g.begin() + 2, g.end()));
    bool seen = false;
    for (const auto& prev : out)
      if (prev.cls == cls) {
        seen = true;
        break;
      }
    if (seen) continue;
    std::string desc;
    if (cls == body.flag_curve)
      desc = "the flag curve";
    else if (std::find(s.negative_curves.begin(), s.negative_curves.end(), cls) !=
             s.negative_curves.end())
      desc = "negative curve";
    else if (s.kind == SurfaceKind::L3 && cls == DivisorClass{1, 0, 0, 0, -1})
      desc = "strict transform of a general line through P_4";
    else
      desc = "general member of |" + class_string(cls) + "|";
    out.push_back({std::move(cls), std::move(desc)});
  }
  std::sort(out.begin(), out.end(),
            [](const CoxGenerator& a, const CoxGenerator& b) { return a.cls < b.cls; });
  return out;
}

}  // namespace okb
