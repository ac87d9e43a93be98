#include "okbody/okounkov.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "okbody/global.hpp"
#include "okbody/simplex.hpp"

namespace okb {

Rat OkounkovPolygon::beta_at(const Rat& t) const {
  assert(!breakpoints.empty());
  assert(t >= nu && t <= mu);
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (t > breakpoints[i + 1].t) continue;
    const auto& a = breakpoints[i];
    const auto& b = breakpoints[i + 1];
    return a.beta + (t - a.t) * (b.beta - a.beta) / (b.t - a.t);
  }
  return breakpoints.back().beta;
}

Rat mu_bound(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c) {
  const auto& gens = s.eff_generators;
  LinearProgram lp(gens.size() + 1);  // coefficients x_i, then t
  for (size_t i = 0; i <= gens.size(); ++i) lp.set_nonnegative(i);
  for (int row = 0; row < s.rank; ++row) {
    QVec coeffs(gens.size() + 1);
    for (size_t i = 0; i < gens.size(); ++i) coeffs[i] = Rat(gens[i].coords[row]);
    coeffs[gens.size()] = Rat(c.coords[row]);
    lp.add_eq(std::move(coeffs), d.coords[row]);
  }
  QVec obj(gens.size() + 1, Rat(0));
  obj[gens.size()] = 1;
  LpResult r = lp.maximize(obj);
  if (r.status == LpStatus::Infeasible) throw NotEffectiveError("divisor is not effective");
  if (r.status == LpStatus::Unbounded) throw DomainError("mu is unbounded: invalid surface data");
  return r.objective;
}

Rat nu_start(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c) {
  for (const auto& [curve, coeff] : zariski_decompose(s, d).negative)
    if (curve == c) return coeff;
  return Rat(0);
}

namespace {

struct Chamber {
  std::vector<DivisorClass> support;
  QMat coeff_lines;  // per support curve: (a0, a1) with a(t) = a0 + a1 t
  // P(t).X is linear in t for any fixed class X.
  Rat p_dot_0(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c,
              const DivisorClass& x) const {
    (void)c;
    Rat v = intersect(s, d, x);
    for (size_t i = 0; i < support.size(); ++i)
      v -= coeff_lines[i][0] * intersect(s, support[i], x);
    return v;
  }
  Rat p_dot_1(const SurfaceModel& s, const DivisorClass& c, const DivisorClass& x) const {
    Rat v = -Rat(intersect(s, c, x));
    for (size_t i = 0; i < support.size(); ++i)
      v -= coeff_lines[i][1] * intersect(s, support[i], x);
    return v;
  }
};

Chamber linearize(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c,
                  std::vector<DivisorClass> support) {
  Chamber ch;
  ch.support = std::move(support);
  const size_t n = ch.support.size();
  ch.coeff_lines.assign(n, QVec(2, Rat(0)));
  if (n == 0) return ch;
  QMat gram(n, QVec(n));
  QVec rhs0(n), rhs1(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) gram[i][j] = Rat(intersect(s, ch.support[i], ch.support[j]));
    rhs0[i] = intersect(s, d, ch.support[i]);
    rhs1[i] = -Rat(intersect(s, c, ch.support[i]));
  }
  auto a0 = solve_linear(gram, rhs0);
  auto a1 = solve_linear(gram, rhs1);
  assert(a0 && a1);
  for (size_t i = 0; i < n; ++i) ch.coeff_lines[i] = {(*a0)[i], (*a1)[i]};
  return ch;
}

}  // namespace

OkounkovPolygon okounkov_polygon(const SurfaceModel& s, const QDivisor& d,
                                 const FlagSpec& flag) {
  const DivisorClass& c = flag.curve;
  // multiples of irreducible classes are admitted as flags (the published
  // optimal sets contain doubled conics); the valuation then weights the
  // underlying curve by the multiple
  if (!is_irreducible_class(s, DivisorClass(primitive(c.coords))))
    throw DomainError("flag curve is not an irreducible class");
  if (!is_effective(s, d)) throw NotEffectiveError("divisor is not effective");
  if (volume(s, d) == 0) throw DomainError("not big");

  OkounkovPolygon body;
  body.nu = nu_start(s, d, c);
  body.mu = mu_bound(s, d, c);
  if (body.mu == body.nu)
    throw DomainError("curve in stable negative locus");  // cannot occur for big D

  // Chamber walk. Each chamber is located by probing a point strictly inside
  // it, re-deriving the support from a fresh decomposition there, and
  // computing the exact interval on which that support stays valid.
  Rat t_cur = body.nu;
  std::set<DivisorClass> neg_set(s.negative_curves.begin(), s.negative_curves.end());
  while (t_cur < body.mu) {
    Chamber ch;
    Rat hi;
    Rat window_end = body.mu;
    for (int denom = 2;; ++denom) {
      const Rat tp = t_cur + (window_end - t_cur) / denom;
      std::vector<DivisorClass> support;
      for (const auto& [curve, coeff] : zariski_decompose(s, d - tp * QDivisor(c)).negative)
        if (coeff > 0) support.push_back(curve);
      std::sort(support.begin(), support.end());
      ch = linearize(s, d, c, std::move(support));

      // Validity interval of this support around tp. Each constraint is an
      // exact linear function of t that is positive at tp: a support
      // coefficient a_i(t), or P(t).C' for a generator outside the support.
      Rat lo = t_cur - 1;
      hi = body.mu;
      bool on_wall = false;
      auto consider = [&](const Rat& f0, const Rat& f1) {
        if (f1 == 0) return;  // constraint never binds along the segment
        const Rat root = -f0 / f1;
        if (root == tp)
          on_wall = true;
        else if (f1 < 0) {  // fails above the root
          if (root < hi) hi = root;
        } else {  // fails below the root
          if (root > lo) lo = root;
        }
      };
      for (size_t i = 0; i < ch.support.size(); ++i)
        consider(ch.coeff_lines[i][0], ch.coeff_lines[i][1]);
      for (const auto& gen : s.eff_generators) {
        if (std::find(ch.support.begin(), ch.support.end(), gen) != ch.support.end()) continue;
        consider(ch.p_dot_0(s, d, c, gen), ch.p_dot_1(s, c, gen));
      }
      if (on_wall) continue;  // probe landed exactly on a wall, re-probe
      if (lo <= t_cur) break;
      window_end = lo;  // probe overshot at least one wall; shrink and retry
      denom = 1;
    }

    Rat beta = ch.p_dot_0(s, d, c, c) + t_cur * ch.p_dot_1(s, c, c);
    body.breakpoints.push_back({t_cur, beta, ch.support});
    assert(hi > t_cur);
    t_cur = hi;
    if (t_cur >= body.mu) {
      Rat beta_mu = ch.p_dot_0(s, d, c, c) + body.mu * ch.p_dot_1(s, c, c);
      std::vector<DivisorClass> support_mu;
      for (const auto& [curve, coeff] : zariski_decompose(s, d - body.mu * QDivisor(c)).negative)
        support_mu.push_back(curve);
      std::sort(support_mu.begin(), support_mu.end());
      body.breakpoints.push_back({body.mu, beta_mu, support_mu});
    }
  }

  // drop spurious breakpoints where the chamber support did not change
  auto& bps = body.breakpoints;
  for (size_t i = 1; i + 1 < bps.size();) {
    if (bps[i].support == bps[i - 1].support)
      bps.erase(bps.begin() + i);
    else
      ++i;
  }

  std::vector<QPoint> pts;
  pts.push_back({body.nu, Rat(0)});
  pts.push_back({body.mu, Rat(0)});
  for (const auto& bp : bps) pts.push_back({bp.t, bp.beta});
  body.polygon = make_polygon(std::move(pts));
  return body;
}

Polygon numerical_fiber(const SurfaceModel& s, const QDivisor& d, const FlagSpec& flag) {
  const DivisorClass& c = flag.curve;
  const QDivisor kc = anticanonical(s) - QDivisor(c);
  if (!is_nef(s, kc) || intersect(s, kc, kc) <= 0)
    throw DomainError("-K - C must be big and nef");
  if (!is_effective(s, d)) throw NotEffectiveError("divisor is not effective");
  if (is_big(s, d)) throw DomainError("numerical_fiber expects a non-big divisor");

  if (is_zero(d)) return make_polygon({{Rat(0), Rat(0)}});
  const Rat m = mu_bound(s, d, c);
  if (m == 0) return make_polygon({{Rat(0), Rat(0)}, {Rat(0), intersect(s, d, c)}});

  const GlobalBody body = global_body(s, flag);
  // maximal second valuation coordinate of the fiber over [D] at t = mu
  LinearProgram lp(2);
  for (const auto& f : body.cone.facets) {
    QVec row = {Rat(f[0]), Rat(f[1])};
    Rat shift = 0;
    for (int i = 0; i < s.rank; ++i) shift += Rat(f[2 + i]) * d.coords[i];
    lp.add_ge(std::move(row), -shift);
  }
  lp.add_eq({Rat(1), Rat(0)}, m);
  LpResult r = lp.maximize({Rat(0), Rat(1)});
  if (r.status != LpStatus::Optimal) throw DomainError("empty global-body fiber");
  return make_polygon({{Rat(0), Rat(0)}, {m, r.objective}});
}

}  // namespace okb
