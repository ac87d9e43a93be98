#pragma once

#include <algorithm>
#include <vector>

#include "okbody/lattice.hpp"

// Published reference values used by reproduce_paper and the acceptance suite.
namespace okb::refdata {

struct X5Row {
  IVec divisor;
  Int min_area;
  // distinct optimal nef classes; the optimal negative set is always all 16
  std::vector<IVec> nef;
};

const std::vector<X5Row>& x5_table();

// 39 x 8 facet normals of the X5 global body, rows as printed
const std::vector<IVec>& x5_global_facets();

// 11 x 7 facet normals of the L3 global body
const std::vector<IVec>& l3_global_facets();

// 9 rays of the L3 global body, coordinates (nu1, nu2, H, E_1..E_4)
const std::vector<IVec>& l3_global_rays();

// set equality up to a single global sign flip of b
inline bool same_rows_up_to_sign(std::vector<IVec> a, std::vector<IVec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return true;
  for (auto& row : b)
    for (auto& x : row) x = -x;
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace okb::refdata
