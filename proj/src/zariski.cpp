#include "okbody/zariski.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace okb {

QDivisor ZariskiDecomposition::negative_part(int rank) const {
  QDivisor n(QVec(rank, Rat(0)));
  for (const auto& [c, a] : negative) n = n + a * QDivisor(c);
  return n;
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const QDivisor& d) {
  if (!is_effective(s, d)) throw NotEffectiveError("divisor is not pseudo-effective");

  // Grow the support one round at a time: start with the curves D meets
  // negatively, solve the negative-definite system (C_i.C_j) a_j = (D.C_i),
  // and add every curve the remainder still meets negatively.
  std::set<DivisorClass> support;
  for (const auto& c : s.negative_curves)
    if (intersect(s, d, c) < 0) support.insert(c);

  for (;;) {
    std::vector<DivisorClass> t(support.begin(), support.end());
    QVec a;
    if (!t.empty()) {
      QMat gram(t.size(), QVec(t.size()));
      QVec rhs(t.size());
      for (size_t i = 0; i < t.size(); ++i) {
        for (size_t j = 0; j < t.size(); ++j)
          gram[i][j] = Rat(intersect(s, t[i], t[j]));
        rhs[i] = intersect(s, d, t[i]);
      }
      auto sol = solve_linear(std::move(gram), std::move(rhs));
      assert(sol);  // support Gram matrices are negative definite
      a = *sol;
    }
    QDivisor p = d;
    for (size_t i = 0; i < t.size(); ++i) p = p - a[i] * QDivisor(t[i]);

    bool grew = false;
    for (const auto& c : s.negative_curves)
      if (!support.count(c) && intersect(s, p, c) < 0) {
        support.insert(c);
        grew = true;
      }
    if (grew) continue;

    ZariskiDecomposition z;
    z.positive = std::move(p);
    for (size_t i = 0; i < t.size(); ++i) {
      assert(a[i] >= 0);
      if (a[i] > 0) z.negative.emplace_back(t[i], a[i]);
    }
    return z;
  }
}

std::vector<DivisorClass> null_set(const SurfaceModel& s, const QDivisor& p) {
  if (!is_nef(s, p)) throw DomainError("null_set requires a nef divisor");
  std::vector<DivisorClass> out;
  for (const auto& c : s.negative_curves)
    if (intersect(s, p, c) == 0) out.push_back(c);
  return out;
}

std::vector<DivisorClass> neg_set(const SurfaceModel& s, const QDivisor& d) {
  std::vector<DivisorClass> out;
  for (const auto& [c, a] : zariski_decompose(s, d).negative) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

Int integrality_bound(const SurfaceModel& s) {
  Int b = 1;
  for (const auto& c : s.negative_curves) {
    Int sq = -intersect(s, c, c);
    if (sq > b) b = sq;
  }
  Int result = 1;
  for (int i = 1; i < s.rank; ++i) result *= b;
  return result;
}

Rat volume(const SurfaceModel& s, const QDivisor& d) {
  const QDivisor p = zariski_decompose(s, d).positive;
  return intersect(s, p, p);
}

bool is_big(const SurfaceModel& s, const QDivisor& d) {
  return is_effective(s, d) && volume(s, d) > 0;
}

}  // namespace okb
