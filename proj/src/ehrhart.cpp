#include "okbody/ehrhart.hpp"

#include <algorithm>
#include <cassert>

namespace okb {

std::string Poly2::str() const {
  auto term = [](const Rat& c, const char* v) -> std::string {
    if (c == 0) return "";
    std::string s = rat_to_string(c < 0 ? Rat(-c) : c);
    if (*v && s == "1") s = "";
    return s + v;
  };
  std::string out;
  const Rat* cs[3] = {&a2, &a1, &a0};
  const char* vs[3] = {"t^2", "t", ""};
  for (int i = 0; i < 3; ++i) {
    if (*cs[i] == 0) continue;
    if (!out.empty()) out += *cs[i] < 0 ? " - " : " + ";
    else if (*cs[i] < 0)
      out += "-";
    out += term(*cs[i], vs[i]);
  }
  return out.empty() ? "0" : out;
}

std::pair<Int, Polygon> scale_to_integral(const Polygon& p) {
  Int k0 = 1;
  for (const auto& v : p.vertices) {
    k0 = int_lcm(k0, denominator(v[0]));
    k0 = int_lcm(k0, denominator(v[1]));
  }
  return {k0, scale(p, Rat(k0))};
}

Int lattice_count(const Polygon& polygon, const Int& k) {
  if (polygon.vertices.empty()) throw DomainError("empty polygon");
  assert(polygon_is_integral(polygon));
  assert(k >= 1);
  const Polygon p = scale(polygon, Rat(k));
  const auto& v = p.vertices;
  Rat xmin = v[0][0], xmax = v[0][0];
  for (const auto& pt : v) {
    xmin = std::min(xmin, pt[0]);
    xmax = std::max(xmax, pt[0]);
  }
  Int count = 0;
  for (Int x = numerator(xmin); x <= numerator(xmax); ++x) {
    // vertical slice [ylo, yhi] from the edges
    bool have = false;
    Rat ylo, yhi;
    for (size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      Rat x0 = a[0], x1 = b[0];
      if (x0 > x1) std::swap(x0, x1);
      if (Rat(x) < x0 || Rat(x) > x1) continue;
      Rat y;
      if (a[0] == b[0])
        y = std::min(a[1], b[1]);  // handled twice below via both endpoints
      else
        y = a[1] + (Rat(x) - a[0]) * (b[1] - a[1]) / (b[0] - a[0]);
      if (!have) {
        ylo = yhi = y;
        have = true;
      } else {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
      }
      if (a[0] == b[0]) {
        ylo = std::min({ylo, a[1], b[1]});
        yhi = std::max({yhi, a[1], b[1]});
      }
    }
    if (!have) continue;
    Int lo = rat_ceil(ylo), hi = rat_floor(yhi);
    if (hi >= lo) count += hi - lo + 1;
  }
  return count;
}

Poly2 ehrhart_polynomial(const Polygon& polygon) {
  assert(polygon_is_integral(polygon));
  const Rat area = polygon_area(polygon);
  if (area == 0) throw DomainError("degenerate polygon");
  return {area, Rat(boundary_lattice_points(polygon)) / 2, Rat(1)};
}

Poly2 hilbert_polynomial(const SurfaceModel& s, const QDivisor& d) {
  const QDivisor p = zariski_decompose(s, d).positive;
  return {intersect(s, p, p) / 2, intersect(s, p, anticanonical(s)) / 2, Rat(1)};
}

Rat normalized_surface_area(const Polygon& body) {
  auto [k0, scaled] = scale_to_integral(body);
  return Rat(boundary_lattice_points(scaled)) / k0;
}

Rat normalized_surface_area(const SurfaceModel& s, const QDivisor& d, const DivisorClass& c) {
  return normalized_surface_area(okounkov_polygon(s, d, FlagSpec{c}).polygon);
}

DefectReport normal_defect_report(const SurfaceModel& s, const QDivisor& d,
                                  const DivisorClass& c) {
  const OkounkovPolygon body = okounkov_polygon(s, d, FlagSpec{c});
  auto [k0, scaled] = scale_to_integral(body.polygon);
  DefectReport rep;
  rep.k0 = k0;
  rep.ehrhart = ehrhart_polynomial(scaled);
  rep.hilbert = hilbert_polynomial(s, Rat(k0) * d);
  rep.is_normal = rep.ehrhart == rep.hilbert;
  return rep;
}

}  // namespace okb
