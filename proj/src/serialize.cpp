#include "okbody/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace okb {

json rat_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  return rat_from_string(j.get<std::string>());
}

namespace {

json ivec_json(const IVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json point_json(const QPoint& p) { return json::array({rat_json(p[0]), rat_json(p[1])}); }

}  // namespace

void to_json(json& j, const DivisorClass& d) { j = ivec_json(d.coords); }

void to_json(json& j, const QDivisor& d) {
  j = json::array();
  for (const auto& x : d.coords) j.push_back(rat_json(x));
}

void to_json(json& j, const ZariskiDecomposition& z) {
  json neg = json::array();
  for (const auto& [curve, coeff] : z.negative)
    neg.push_back({{"curve", curve}, {"coeff", rat_json(coeff)}});
  j = {{"positive", z.positive}, {"negative", neg}};
}

void to_json(json& j, const Polygon& p) {
  j = json::array();
  for (const auto& v : p.vertices) j.push_back(point_json(v));
}

void to_json(json& j, const OkounkovPolygon& p) {
  json bps = json::array();
  for (const auto& bp : p.breakpoints) {
    json support = json::array();
    for (const auto& c : bp.support) support.push_back(c);
    bps.push_back({{"t", rat_json(bp.t)}, {"beta", rat_json(bp.beta)}, {"support", support}});
  }
  j = {{"nu", rat_json(p.nu)},
       {"mu", rat_json(p.mu)},
       {"breakpoints", bps},
       {"vertices", p.polygon}};
}

void to_json(json& j, const Poly2& p) {
  j = {{"a2", rat_json(p.a2)}, {"a1", rat_json(p.a1)}, {"a0", rat_json(p.a0)}};
}

void to_json(json& j, const DefectReport& r) {
  j = {{"ehrhart", r.ehrhart},
       {"hilbert", r.hilbert},
       {"k0", r.k0.str()},
       {"is_normal", r.is_normal}};
}

void to_json(json& j, const RationalCone& c) {
  json rays = json::array(), facets = json::array();
  for (const auto& r : c.rays) rays.push_back(ivec_json(r));
  for (const auto& f : c.facets) facets.push_back(ivec_json(f));
  j = {{"dim", c.dim}, {"rays", rays}, {"facets", facets}};
}

void to_json(json& j, const OptimizationResult& r) {
  json curves = json::array();
  for (const auto& c : r.optimal_curves)
    curves.push_back(
        {{"class", c.cls}, {"kind", c.kind == CurveKind::Negative ? "negative" : "nef"}});
  j = {{"optimum", rat_json(r.optimum)},
       {"optimal_curves", curves},
       {"hilbert_second", rat_json(r.hilbert_second)},
       {"induces_normal", r.induces_normal}};
}

void to_json(json& j, const GlobalBody& b) {
  json raw = json::array();
  for (const auto& g : b.raw_generators) raw.push_back(ivec_json(g));
  j = {{"surface", b.surface.name()},
       {"flag_curve", b.flag_curve},
       {"ambient_dim", b.ambient_dim},
       {"raw_generators", raw},
       {"cone", b.cone},
       {"hilbert_verified_to", b.hilbert_verified_to.str()}};
}

void to_json(json& j, const CoxGenerator& g) {
  j = {{"class", g.cls}, {"description", g.description}};
}

Polygon polygon_from_json(const json& j) {
  Polygon p;
  for (const auto& v : j) p.vertices.push_back({rat_from_json(v[0]), rat_from_json(v[1])});
  return p;
}

std::string svg_polygon(const Polygon& p) {
  Rat xmin(0), xmax(1), ymin(0), ymax(1);
  for (const auto& v : p.vertices) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  const Int gx0 = rat_floor(xmin) - 1, gx1 = rat_ceil(xmax) + 1;
  const Int gy0 = rat_floor(ymin) - 1, gy1 = rat_ceil(ymax) + 1;
  const double unit = 40.0;
  auto px = [&](const Rat& x) {
    return (x - Rat(gx0)).convert_to<double>() * unit;
  };
  auto py = [&](const Rat& y) {
    return (Rat(gy1) - y).convert_to<double>() * unit;
  };
  const double w = px(Rat(gx1)), h = py(Rat(gy0));
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (Int x = gx0; x <= gx1; ++x)
    out << "  <line x1=\"" << px(Rat(x)) << "\" y1=\"0\" x2=\"" << px(Rat(x)) << "\" y2=\"" << h
        << "\" stroke=\"#ddd\"/>\n";
  for (Int y = gy0; y <= gy1; ++y)
    out << "  <line x1=\"0\" y1=\"" << py(Rat(y)) << "\" x2=\"" << w << "\" y2=\"" << py(Rat(y))
        << "\" stroke=\"#ddd\"/>\n";
  for (Int x = gx0; x <= gx1; ++x)
    for (Int y = gy0; y <= gy1; ++y)
      out << "  <circle cx=\"" << px(Rat(x)) << "\" cy=\"" << py(Rat(y))
          << "\" r=\"1.5\" fill=\"#999\"/>\n";
  if (!p.vertices.empty()) {
    out << "  <polygon points=\"";
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      if (i) out << " ";
      out << px(p.vertices[i][0]) << "," << py(p.vertices[i][1]);
    }
    out << "\" fill=\"rgba(60,100,200,0.25)\" stroke=\"#2a4d9b\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace okb
