#include "okbody/cones.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace okb {

namespace {

Rat idot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}

IVec combine(const Int& ca, const IVec& a, const Int& cb, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return primitive(std::move(out));
}

}  // namespace

DualDescription dual_cone(const std::vector<IVec>& normals, int dim) {
  if (dim <= 0) throw DomainError("zero-dimensional input");
  DualDescription dd;
  for (int i = 0; i < dim; ++i) {
    IVec e(dim, 0);
    e[i] = 1;
    dd.lineality.push_back(e);
  }
  std::vector<IVec> processed;
  for (const IVec& a : normals) {
    // find a lineality vector not orthogonal to a
    size_t hit = dd.lineality.size();
    for (size_t i = 0; i < dd.lineality.size(); ++i)
      if (idot(a, dd.lineality[i]) != 0) {
        hit = i;
        break;
      }
    if (hit < dd.lineality.size()) {
      IVec l0 = dd.lineality[hit];
      dd.lineality.erase(dd.lineality.begin() + hit);
      Int al0 = numerator(idot(a, l0));
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      for (auto& l : dd.lineality) {
        Int al = numerator(idot(a, l));
        if (al != 0) l = combine(al0, l, -al, l0);
      }
      for (auto& r : dd.rays) {
        Int ar = numerator(idot(a, r));
        if (ar != 0) r = combine(al0, r, -ar, l0);
      }
      dd.rays.push_back(std::move(l0));
    } else {
      std::vector<IVec> pos, zero, neg;
      for (auto& r : dd.rays) {
        Rat v = idot(a, r);
        if (v > 0)
          pos.push_back(std::move(r));
        else if (v == 0)
          zero.push_back(std::move(r));
        else
          neg.push_back(std::move(r));
      }
      if (!neg.empty() && !pos.empty()) {
        // tight sets over processed constraints, for the adjacency test
        auto tight = [&](const IVec& r) {
          std::vector<bool> t(processed.size());
          for (size_t i = 0; i < processed.size(); ++i) t[i] = idot(processed[i], r) == 0;
          return t;
        };
        std::vector<IVec> created;
        std::vector<std::vector<bool>> tp, tz, tn;
        for (const auto& r : pos) tp.push_back(tight(r));
        for (const auto& r : zero) tz.push_back(tight(r));
        for (const auto& r : neg) tn.push_back(tight(r));
        for (size_t i = 0; i < pos.size(); ++i) {
          for (size_t j = 0; j < neg.size(); ++j) {
            std::vector<bool> common(processed.size());
            for (size_t k = 0; k < processed.size(); ++k) common[k] = tp[i][k] && tn[j][k];
            // adjacent iff no third ray is tight on every common constraint
            auto covers = [&](const std::vector<bool>& t) {
              for (size_t k = 0; k < processed.size(); ++k)
                if (common[k] && !t[k]) return false;
              return true;
            };
            bool adjacent = true;
            for (size_t k = 0; k < pos.size() && adjacent; ++k)
              if (k != i && covers(tp[k])) adjacent = false;
            for (size_t k = 0; k < neg.size() && adjacent; ++k)
              if (k != j && covers(tn[k])) adjacent = false;
            for (size_t k = 0; k < zero.size() && adjacent; ++k)
              if (covers(tz[k])) adjacent = false;
            if (!adjacent) continue;
            Int ap = numerator(idot(a, pos[i]));
            Int an = numerator(idot(a, neg[j]));
            created.push_back(combine(ap, neg[j], -an, pos[i]));
          }
        }
        for (auto& r : created) zero.push_back(std::move(r));
      }
      dd.rays.clear();
      for (auto& r : pos) dd.rays.push_back(std::move(r));
      for (auto& r : zero) dd.rays.push_back(std::move(r));
    }
    processed.push_back(a);
  }
  // dedupe
  std::sort(dd.rays.begin(), dd.rays.end());
  dd.rays.erase(std::unique(dd.rays.begin(), dd.rays.end()), dd.rays.end());
  return dd;
}

RationalCone dual_and_minimize(const std::vector<IVec>& rays, int dim) {
  if (dim <= 0 || rays.empty()) throw DomainError("zero-dimensional input");
  RationalCone cone;
  cone.dim = dim;
  DualDescription dual = dual_cone(rays, dim);
  cone.facets = dual.rays;
  for (const auto& l : dual.lineality) {
    cone.facets.push_back(l);
    IVec neg(l.size());
    for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    cone.facets.push_back(std::move(neg));
  }
  DualDescription primal = dual_cone(cone.facets, dim);
  cone.rays = primal.rays;
  for (const auto& l : primal.lineality) {
    cone.rays.push_back(l);
    IVec neg(l.size());
    for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    cone.rays.push_back(std::move(neg));
  }
  std::sort(cone.rays.begin(), cone.rays.end());
  std::sort(cone.facets.begin(), cone.facets.end());
  return cone;
}

std::vector<IVec> enumerate_lattice_points(size_t nvars,
                                           const std::vector<LinearConstraint>& cs) {
  std::vector<IVec> out;
  IVec fixed;
  auto build_lp = [&]() {
    LinearProgram lp(nvars);
    for (const auto& c : cs) {
      if (c.sense > 0)
        lp.add_ge(c.coeffs, c.rhs);
      else if (c.sense < 0)
        lp.add_le(c.coeffs, c.rhs);
      else
        lp.add_eq(c.coeffs, c.rhs);
    }
    for (size_t i = 0; i < fixed.size(); ++i) {
      QVec e(nvars, Rat(0));
      e[i] = 1;
      lp.add_eq(std::move(e), Rat(fixed[i]));
    }
    return lp;
  };
  auto recurse = [&](auto&& self) -> void {
    const size_t k = fixed.size();
    if (k == nvars) {
      out.push_back(fixed);
      return;
    }
    LinearProgram lp = build_lp();
    QVec obj(nvars, Rat(0));
    obj[k] = 1;
    LpResult hi = lp.maximize(obj);
    if (hi.status == LpStatus::Infeasible) return;
    LpResult lo = lp.minimize(obj);
    if (hi.status == LpStatus::Unbounded || lo.status == LpStatus::Unbounded)
      throw DomainError("unbounded polyhedron in lattice enumeration");
    for (Int v = rat_ceil(lo.objective); v <= rat_floor(hi.objective); ++v) {
      fixed.push_back(v);
      self(self);
      fixed.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

std::optional<IVec> find_positive_grading(const RationalCone& cone) {
  if (cone.rays.empty()) return std::nullopt;
  const size_t n = cone.rays[0].size();
  LinearProgram lp(n);
  for (const auto& r : cone.rays) {
    QVec row(n);
    for (size_t i = 0; i < n; ++i) row[i] = Rat(r[i]);
    lp.add_ge(std::move(row), Rat(1));
  }
  // keep the coefficients bounded so the LP has an optimum
  for (size_t i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    lp.add_le(e, Rat(1000));
    for (auto& x : e) x = -x;
    e[i] = -1;
    lp.add_le(e, Rat(1000));
  }
  LpResult r = lp.maximize(QVec(n, Rat(0)));
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return primitive(r.point);
}

HilbertCheckResult hilbert_basis_check(const RationalCone& cone,
                                       const std::vector<IVec>& generators,
                                       const Int& degree_bound,
                                       std::optional<IVec> grading) {
  if (!grading) grading = find_positive_grading(cone);
  if (!grading) throw DomainError("no strictly positive grading: cone is not pointed");
  const IVec& g = *grading;
  const size_t n = g.size();
  for (const auto& gen : generators) {
    if (idot(g, gen) <= 0) throw DomainError("generator with non-positive grading");
    for (const auto& f : cone.facets)
      if (idot(f, gen) < 0) throw DomainError("generator outside the cone");
  }

  std::vector<LinearConstraint> cs;
  for (const auto& f : cone.facets) {
    QVec row(n);
    for (size_t i = 0; i < n; ++i) row[i] = Rat(f[i]);
    cs.push_back({std::move(row), Rat(0), +1});
  }
  QVec grow(n);
  for (size_t i = 0; i < n; ++i) grow[i] = Rat(g[i]);
  cs.push_back({std::move(grow), Rat(degree_bound), -1});

  std::map<IVec, bool> memo;
  auto in_cone = [&](const IVec& x) {
    for (const auto& f : cone.facets)
      if (idot(f, x) < 0) return false;
    return true;
  };
  auto representable = [&](auto&& self, const IVec& x) -> bool {
    if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; })) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& gen : generators) {
      IVec y(n);
      for (size_t i = 0; i < n; ++i) y[i] = x[i] - gen[i];
      if (!in_cone(y)) continue;
      if (self(self, y)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  };

  HilbertCheckResult result;
  result.verified = true;
  for (const IVec& x : enumerate_lattice_points(n, cs)) {
    if (!representable(representable, x)) {
      result.verified = false;
      result.missing = {x};
      return result;
    }
  }
  return result;
}

std::vector<DivisorClass> nef_extremal_rays(const SurfaceModel& s) {
  std::vector<IVec> normals;
  for (const auto& c : s.eff_generators) {
    IVec n(c.coords);
    for (int i = 1; i < s.rank; ++i) n[i] = -n[i];  // gram * C
    normals.push_back(std::move(n));
  }
  DualDescription dd = dual_cone(normals, s.rank);
  assert(dd.lineality.empty());  // effective cone is full dimensional
  std::vector<DivisorClass> out;
  for (auto& r : dd.rays) out.emplace_back(std::move(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace okb
