#include "okbody/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "okbody/simplex.hpp"

namespace okb {

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  assert(a.coords.size() == b.coords.size());
  QDivisor r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) {
  assert(a.coords.size() == b.coords.size());
  QDivisor r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

QDivisor operator*(const Rat& s, const QDivisor& d) {
  QDivisor r = d;
  for (auto& x : r.coords) x *= s;
  return r;
}

std::string SurfaceModel::name() const {
  switch (kind) {
    case SurfaceKind::L3:
      return "L3";
    case SurfaceKind::S6:
      return "S6";
    default:
      return "X" + std::to_string(r);
  }
}

namespace {

DivisorClass curve(int rank, int h, const std::vector<std::pair<int, int>>& e) {
  IVec v(rank, 0);
  v[0] = h;
  for (auto [idx, mult] : e) v[idx] = -mult;
  return DivisorClass(std::move(v));
}

DivisorClass exceptional(int rank, int i) {
  IVec v(rank, 0);
  v[i] = 1;
  return DivisorClass(std::move(v));
}

// The (-1)-curve families on X_r, instantiated over all index subsets.
std::vector<DivisorClass> xr_negative_curves(int r) {
  const int rank = r + 1;
  // (degree in H, exceptional multiplicities)
  const std::vector<std::pair<int, std::vector<int>>> families = {
      {1, {1, 1}},
      {2, {1, 1, 1, 1, 1}},
      {3, {2, 1, 1, 1, 1, 1, 1}},
      {4, {2, 2, 2, 1, 1, 1, 1, 1}},
      {5, {2, 2, 2, 2, 2, 2, 1, 1}},
      {6, {3, 2, 2, 2, 2, 2, 2, 2}},
  };
  std::set<DivisorClass> out;
  for (int i = 1; i <= r; ++i) out.insert(exceptional(rank, i));
  for (const auto& [h, mults] : families) {
    const int k = static_cast<int>(mults.size());
    if (k > r) continue;
    // all k-subsets of {1..r}, all distinct arrangements of the multiplicities
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    for (;;) {
      std::vector<int> perm = mults;
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<std::pair<int, int>> assign;
        for (int i = 0; i < k; ++i) assign.emplace_back(idx[i], perm[i]);
        out.insert(curve(rank, h, assign));
      } while (std::next_permutation(perm.begin(), perm.end()));
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == r - (k - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<DivisorClass> l3_negative_curves() {
  std::set<DivisorClass> out;
  for (int i = 1; i <= 4; ++i) out.insert(exceptional(5, i));
  for (int i = 1; i <= 3; ++i) out.insert(curve(5, 1, {{i, 1}, {4, 1}}));
  out.insert(curve(5, 1, {{1, 1}, {2, 1}, {3, 1}}));  // the (-2)-curve
  return {out.begin(), out.end()};
}

std::vector<DivisorClass> s6_negative_curves() {
  std::set<DivisorClass> out;
  for (int i = 1; i <= 6; ++i) out.insert(exceptional(7, i));
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) out.insert(curve(7, 1, {{i, 1}, {j, 1}}));
  out.insert(curve(7, 2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}));  // the (-2)-conic
  return {out.begin(), out.end()};
}

}  // namespace

SurfaceModel make_surface(SurfaceKind kind, int r) {
  SurfaceModel s;
  s.kind = kind;
  switch (kind) {
    case SurfaceKind::XR:
      if (r < 1 || r > 8) throw DomainError("XR requires 1 <= r <= 8");
      s.r = r;
      s.negative_curves = xr_negative_curves(r);
      break;
    case SurfaceKind::L3:
      s.r = 4;
      s.negative_curves = l3_negative_curves();
      break;
    case SurfaceKind::S6:
      s.r = 6;
      s.negative_curves = s6_negative_curves();
      break;
  }
  s.rank = s.r + 1;
  s.gram.assign(s.rank, IVec(s.rank, 0));
  s.gram[0][0] = 1;
  for (int i = 1; i < s.rank; ++i) s.gram[i][i] = -1;
  IVec k(s.rank, 1);
  k[0] = -3;
  s.canonical = DivisorClass(std::move(k));
  s.eff_generators = s.negative_curves;
  if (kind == SurfaceKind::XR && r == 1) s.eff_generators.push_back(curve(2, 1, {{1, 1}}));
  std::sort(s.eff_generators.begin(), s.eff_generators.end());
  return s;
}

SurfaceModel make_surface(const std::string& name) {
  if (name == "L3") return make_surface(SurfaceKind::L3);
  if (name == "S6") return make_surface(SurfaceKind::S6);
  if (name.size() == 2 && name[0] == 'X' && name[1] >= '1' && name[1] <= '8')
    return make_surface(SurfaceKind::XR, name[1] - '0');
  throw DomainError("unknown surface: " + name);
}

std::string class_string(const DivisorClass& d) {
  std::string out;
  for (size_t i = 0; i < d.coords.size(); ++i) {
    const Int& c = d.coords[i];
    if (c == 0) continue;
    std::string base = i == 0 ? "H" : "E_" + std::to_string(i);
    Int a = c < 0 ? Int(-c) : c;
    std::string term = (a == 1 ? "" : a.str()) + base;
    if (c < 0)
      out += "-" + term;
    else
      out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

Rat intersect(const SurfaceModel& s, const QDivisor& d, const QDivisor& e) {
  if (d.coords.size() != static_cast<size_t>(s.rank) ||
      e.coords.size() != static_cast<size_t>(s.rank))
    throw DomainError("divisor length does not match surface rank");
  Rat v = d.coords[0] * e.coords[0];
  for (int i = 1; i < s.rank; ++i) v -= d.coords[i] * e.coords[i];
  return v;
}

Rat intersect(const SurfaceModel& s, const QDivisor& d, const DivisorClass& e) {
  return intersect(s, d, QDivisor(e));
}

Int intersect(const SurfaceModel& s, const DivisorClass& d, const DivisorClass& e) {
  if (d.coords.size() != static_cast<size_t>(s.rank) ||
      e.coords.size() != static_cast<size_t>(s.rank))
    throw DomainError("divisor length does not match surface rank");
  Int v = d.coords[0] * e.coords[0];
  for (int i = 1; i < s.rank; ++i) v -= d.coords[i] * e.coords[i];
  return v;
}

bool is_nef(const SurfaceModel& s, const QDivisor& d) {
  for (const auto& c : s.eff_generators)
    if (intersect(s, d, c) < 0) return false;
  return true;
}

bool is_effective(const SurfaceModel& s, const QDivisor& d) {
  const auto& gens = s.eff_generators;
  LinearProgram lp(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) lp.set_nonnegative(i);
  for (int row = 0; row < s.rank; ++row) {
    QVec coeffs(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) coeffs[i] = Rat(gens[i].coords[row]);
    lp.add_eq(std::move(coeffs), d.coords[row]);
  }
  return lp.maximize(QVec(gens.size(), Rat(0))).status == LpStatus::Optimal;
}

Int genus(const SurfaceModel& s, const DivisorClass& c) {
  (void)s;
  const Int a = c.coords[0];
  Int g = (a - 1) * (a - 2);
  for (size_t i = 1; i < c.coords.size(); ++i) {
    const Int b = -c.coords[i];
    g -= b * (b - 1);
  }
  assert(g % 2 == 0);
  return g / 2;
}

bool is_irreducible_class(const SurfaceModel& s, const DivisorClass& d) {
  if (s.kind == SurfaceKind::XR && s.r > 6)
    throw TheoryLimitedError("irreducibility criterion not available on " + s.name());
  for (const auto& c : s.negative_curves)
    if (c == d) return true;
  QDivisor q(d);
  if (is_nef(s, q) && intersect(s, d, d) > 0) return true;  // big and nef
  if (s.kind == SurfaceKind::XR && intersect(s, d, d) == 0 &&
      intersect(s, q, anticanonical(s)) == 2)
    return true;  // conic
  return false;
}

}  // namespace okb
