#include "okbody/reference_data.hpp"

namespace okb::refdata {

namespace {

IVec iv(std::initializer_list<int> xs) {
  IVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

const std::vector<X5Row>& x5_table() {
  static const std::vector<X5Row> table = [] {
    std::vector<X5Row> t;
    t.push_back({iv({6, -1, -1, -2, -3, -4}),
                 6,
                 {iv({4, -2, 0, -2, -2, -2}), iv({3, -1, -1, -1, -1, -2}),
                  iv({2, -1, -1, -1, 0, -1}), iv({2, -1, -1, 0, -1, -1}),
                  iv({2, -1, 0, -1, -1, -1}), iv({4, 0, -2, -2, -2, -2}),
                  iv({2, 0, -1, -1, -1, -1}), iv({2, 0, 0, -1, -1, -1}),
                  iv({1, 0, 0, -1, 0, 0}), iv({1, 0, 0, 0, -1, 0}),
                  iv({1, 0, 0, 0, 0, -1}),
                  // the published list admits doubled conics but omits this
                  // one; it attains the optimum (verified by hand)
                  iv({2, 0, 0, 0, 0, -2})}});
    t.push_back({iv({6, -1, -3, -1, -2, -3}),
                 8,
                 {iv({2, -1, -1, -1, 0, -1}), iv({2, -1, -1, 0, -1, -1}),
                  iv({2, 0, -1, -1, -1, -1}), iv({1, 0, -1, 0, 0, 0}),
                  iv({1, 0, 0, 0, 0, -1})}});
    t.push_back({iv({8, -3, -2, -2, -2, -3}), 12, {}});
    t.push_back({iv({4, -1, -1, -1, 0, -1}),
                 8,
                 {iv({2, -1, -1, -1, 0, -1}), iv({1, -1, 0, 0, 0, 0}),
                  iv({1, 0, -1, 0, 0, 0}), iv({1, 0, 0, -1, 0, 0}),
                  iv({1, 0, 0, 0, 0, -1})}});
    t.push_back({iv({7, -4, 0, -2, -3, -3}),
                 9,
                 {iv({3, -2, -1, -1, -1, -1}), iv({2, -1, -1, -1, -1, 0}),
                  iv({2, -1, -1, -1, 0, -1}), iv({2, -1, -1, 0, -1, -1}),
                  iv({4, -2, 0, -2, -2, -2}), iv({3, -2, 0, -1, -1, -1}),
                  iv({2, -1, 0, -1, -1, -1}), iv({2, -1, 0, -1, -1, 0}),
                  iv({2, -1, 0, -1, 0, -1}), iv({2, -1, 0, 0, -1, -1}),
                  iv({1, -1, 0, 0, 0, 0}), iv({1, 0, 0, -1, 0, 0}),
                  iv({1, 0, 0, 0, -1, 0}), iv({1, 0, 0, 0, 0, -1})}});
    for (auto& row : t) std::sort(row.nef.begin(), row.nef.end());
    return t;
  }();
  return table;
}

const std::vector<IVec>& x5_global_facets() {
  static const std::vector<IVec> m = {
      iv({1, 0, 0, 0, 0, 0, 0, 0}),     iv({1, -1, 1, 1, 1, 0, 0, 0}),
      iv({0, -1, 2, 1, 1, 0, 1, 1}),    iv({-1, -1, 3, 1, 1, 1, 1, 2}),
      iv({0, -1, 2, 1, 1, 1, 0, 1}),    iv({-1, -1, 2, 0, 1, 1, 1, 0}),
      iv({0, -1, 1, 0, 1, 0, 0, 0}),    iv({-1, -1, 3, 1, 1, 2, 1, 1}),
      iv({-1, -1, 3, 1, 1, 1, 2, 1}),   iv({0, -1, 2, 1, 1, 1, 1, 0}),
      iv({-1, -1, 2, 0, 1, 0, 1, 1}),   iv({-1, -1, 2, 0, 1, 1, 0, 1}),
      iv({0, -1, 1, 1, 0, 0, 0, 0}),    iv({-1, -1, 2, 1, 0, 1, 1, 0}),
      iv({-1, -1, 2, 1, 0, 1, 0, 1}),   iv({-2, -1, 2, 0, 0, 1, 0, 1}),
      iv({-2, -1, 2, 0, 0, 1, 1, 0}),   iv({-1, -1, 1, 0, 0, 0, 0, 0}),
      iv({-1, -1, 2, 1, 0, 0, 1, 1}),   iv({-2, -1, 2, 0, 0, 0, 1, 1}),
      iv({-2, -1, 3, 1, 0, 1, 1, 2}),   iv({-2, -1, 3, 1, 0, 1, 2, 1}),
      iv({-2, -1, 3, 1, 0, 2, 1, 1}),   iv({-2, -1, 3, 0, 1, 1, 1, 2}),
      iv({-2, -1, 3, 0, 1, 1, 2, 1}),   iv({-2, -1, 3, 0, 1, 2, 1, 1}),
      iv({-2, -1, 4, 1, 1, 2, 2, 2}),   iv({-1, 0, 2, 1, 0, 1, 1, 1}),
      iv({0, 1, 0, 0, 0, 0, 0, 0}),     iv({-1, 0, 1, 0, 0, 1, 0, 0}),
      iv({-1, 0, 1, 0, 0, 0, 0, 1}),    iv({-1, 0, 1, 0, 0, 0, 1, 0}),
      iv({-1, 0, 2, 0, 1, 1, 1, 1}),    iv({-3, -1, 4, 0, 1, 2, 2, 2}),
      iv({-3, -1, 4, 1, 0, 2, 2, 2}),   iv({-4, -1, 4, 0, 0, 2, 2, 2}),
      iv({-3, -1, 3, 0, 0, 2, 1, 1}),   iv({-3, -1, 3, 0, 0, 1, 1, 2}),
      iv({-3, -1, 3, 0, 0, 1, 2, 1}),
  };
  return m;
}

const std::vector<IVec>& l3_global_facets() {
  static const std::vector<IVec> m = {
      iv({1, 0, 0, 0, 0, 0, 0}),   iv({2, -1, 1, 1, 1, 1, 0}),
      iv({1, -1, 1, 0, 1, 1, 0}),  iv({1, -1, 1, 1, 0, 1, 0}),
      iv({1, -1, 1, 1, 1, 0, 0}),  iv({-1, -1, 1, 0, 0, 0, 0}),
      iv({0, -1, 1, 0, 0, 1, 0}),  iv({0, -1, 1, 0, 1, 0, 0}),
      iv({0, -1, 1, 1, 0, 0, 0}),  iv({0, 1, 0, 0, 0, 0, 0}),
      iv({-1, 0, 1, 0, 0, 0, 1}),
  };
  return m;
}

const std::vector<IVec>& l3_global_rays() {
  static const std::vector<IVec> m = {
      iv({0, 0, 0, 0, 0, 0, 1}),    iv({0, 0, 0, 0, 0, 1, 0}),
      iv({0, 0, 0, 0, 1, 0, 0}),    iv({0, 0, 0, 1, 0, 0, 0}),
      iv({0, 0, 1, -1, 0, 0, -1}),  iv({0, 0, 1, 0, -1, 0, -1}),
      iv({0, 0, 1, 0, 0, -1, -1}),  iv({0, 1, 1, 0, 0, 0, -1}),
      iv({1, 0, 1, -1, -1, -1, 0}),
  };
  return m;
}

}  // namespace okb::refdata
