#pragma once

#include <string>

#include "json.hpp"
#include "okbody/ehrhart.hpp"
#include "okbody/global.hpp"
#include "okbody/optimizer.hpp"

namespace okb {

using nlohmann::json;

// rationals serialize as "p/q" strings (plain integer string when q = 1)
json rat_json(const Rat& q);
Rat rat_from_json(const json& j);

void to_json(json& j, const DivisorClass& d);
void to_json(json& j, const QDivisor& d);
void to_json(json& j, const ZariskiDecomposition& z);
void to_json(json& j, const Polygon& p);
void to_json(json& j, const OkounkovPolygon& p);
void to_json(json& j, const Poly2& p);
void to_json(json& j, const DefectReport& r);
void to_json(json& j, const RationalCone& c);
void to_json(json& j, const OptimizationResult& r);
void to_json(json& j, const GlobalBody& b);
void to_json(json& j, const CoxGenerator& g);

Polygon polygon_from_json(const json& j);

// lattice grid plus the polygon, as in the figures
std::string svg_polygon(const Polygon& p);

}  // namespace okb
