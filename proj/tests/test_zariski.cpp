#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "okbody/zariski.hpp"

using namespace okb;

namespace {

QDivisor qd(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(Rat(x));
  return QDivisor(std::move(v));
}

// random nonnegative rational combination of the effective generators
QDivisor random_effective(const SurfaceModel& s, std::mt19937& rng, bool integral = false) {
  std::uniform_int_distribution<int> num(0, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<size_t> pick(0, s.eff_generators.size() - 1);
  QVec v(s.rank, Rat(0));
  for (int terms = 0; terms < 4; ++terms) {
    const auto& g = s.eff_generators[pick(rng)];
    Rat coef = integral ? Rat(num(rng)) : Rat(num(rng), den(rng));
    for (int i = 0; i < s.rank; ++i) v[i] += coef * g.coords[i];
  }
  return QDivisor(std::move(v));
}

// leading principal minors of the support Gram matrix alternate in sign
bool is_negative_definite(QMat a) {
  const size_t n = a.size();
  for (size_t k = 1; k <= n; ++k) {
    QMat m(k, QVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    // determinant by fraction-free-ish Gaussian elimination
    Rat det = 1;
    for (size_t c = 0; c < k; ++c) {
      size_t p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) return false;  // singular minor
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (size_t r = c + 1; r < k; ++r) {
        Rat f = m[r][c] / m[c][c];
        for (size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if ((k % 2 == 1 && det >= 0) || (k % 2 == 0 && det <= 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("nef divisors decompose trivially") {
  SurfaceModel x5 = make_surface("X5");
  for (auto d : {qd({3, -1, -1, -1, -1, -1}), qd({1, 0, 0, 0, 0, 0}),
                 qd({5, -1, -1, -2, -2, -3})}) {
    auto z = zariski_decompose(x5, d);
    CHECK(z.negative.empty());
    CHECK(z.positive == d);
  }
}

TEST_CASE("worked example on X5") {
  SurfaceModel x5 = make_surface("X5");
  auto z = zariski_decompose(x5, qd({6, -1, -1, -2, -3, -4}));
  REQUIRE(z.negative.size() == 1);
  CHECK(z.negative[0].first == DivisorClass{1, 0, 0, 0, -1, -1});
  CHECK(z.negative[0].second == 1);
  CHECK(z.positive == qd({5, -1, -1, -2, -2, -3}));
}

TEST_CASE("negative curves are their own negative part") {
  SurfaceModel x5 = make_surface("X5");
  auto z = zariski_decompose(x5, qd({0, 1, 0, 0, 0, 0}));
  CHECK(is_zero(z.positive));
  REQUIRE(z.negative.size() == 1);
  CHECK(z.negative[0].second == 1);
  auto z2 = zariski_decompose(x5, qd({0, 2, 0, 0, 0, 0}));
  REQUIRE(z2.negative.size() == 1);
  CHECK(z2.negative[0].first == DivisorClass{0, 1, 0, 0, 0, 0});
  CHECK(z2.negative[0].second == 2);
}

TEST_CASE("non-pseudo-effective input throws") {
  SurfaceModel x5 = make_surface("X5");
  CHECK_THROWS_AS((void)zariski_decompose(x5, qd({-1, 0, 0, 0, 0, 0})), NotEffectiveError);
  CHECK_THROWS_AS((void)zariski_decompose(x5, qd({0, -1, 0, 0, 0, 0})), NotEffectiveError);
}

TEST_CASE("null_set and neg_set") {
  SurfaceModel x5 = make_surface("X5");
  CHECK(null_set(x5, anticanonical(x5)).empty());
  auto ns = null_set(x5, qd({5, -1, -1, -2, -2, -3}));
  std::sort(ns.begin(), ns.end());
  std::vector<DivisorClass> expect = {{1, 0, 0, -1, 0, -1}, {1, 0, 0, 0, -1, -1}};
  std::sort(expect.begin(), expect.end());
  CHECK(ns == expect);

  CHECK(neg_set(x5, qd({0, 2, 0, 0, 0, 0})) ==
        std::vector<DivisorClass>{{0, 1, 0, 0, 0, 0}});
  CHECK(neg_set(x5, anticanonical(x5)).empty());
}

TEST_CASE("integrality bounds") {
  CHECK(integrality_bound(make_surface("X5")) == 1);
  CHECK(integrality_bound(make_surface("L3")) == 16);
  CHECK(integrality_bound(make_surface("S6")) == 64);
}

TEST_CASE("volume and bigness") {
  SurfaceModel x5 = make_surface("X5");
  CHECK(volume(x5, anticanonical(x5)) == 4);
  CHECK(volume(x5, qd({6, -1, -1, -2, -3, -4})) == 6);  // P^2 of the positive part
  CHECK(volume(x5, qd({0, 1, 0, 0, 0, 0})) == 0);
  CHECK(is_big(x5, anticanonical(x5)));
  CHECK_FALSE(is_big(x5, qd({1, -1, 0, 0, 0, 0})));
}

TEST_CASE("decomposition invariants on random effective divisors") {
  std::mt19937 rng(20240817);
  for (const char* name : {"X1", "X2", "X3", "X4", "X5", "X6", "L3", "S6"}) {
    SurfaceModel s = make_surface(name);
    for (int trial = 0; trial < 60; ++trial) {
      QDivisor d = random_effective(s, rng);
      auto z = zariski_decompose(s, d);
      // P is nef, coefficients positive, P orthogonal to the support
      CHECK(is_nef(s, z.positive));
      QDivisor sum = z.positive;
      for (const auto& [c, a] : z.negative) {
        CHECK(a > 0);
        CHECK(intersect(s, z.positive, c) == 0);
        sum = sum + a * QDivisor(c);
      }
      CHECK(sum == d);
      // support Gram matrix is negative definite
      if (!z.negative.empty()) {
        const size_t n = z.negative.size();
        QMat gram(n, QVec(n));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            gram[i][j] = Rat(intersect(s, z.negative[i].first, z.negative[j].first));
        CHECK(is_negative_definite(std::move(gram)));
      }
      // homogeneity and idempotence
      auto z3 = zariski_decompose(s, Rat(3) * d);
      CHECK(z3.positive == Rat(3) * z.positive);
      auto zp = zariski_decompose(s, z.positive);
      CHECK(zp.negative.empty());
    }
  }
}

TEST_CASE("integral decomposition on the X_r surfaces") {
  std::mt19937 rng(991);
  for (const char* name : {"X2", "X4", "X5", "X6"}) {
    SurfaceModel s = make_surface(name);
    REQUIRE(integrality_bound(s) == 1);
    for (int trial = 0; trial < 40; ++trial) {
      QDivisor d = random_effective(s, rng, /*integral=*/true);
      auto z = zariski_decompose(s, d);
      for (const auto& x : z.positive.coords) CHECK(is_integral(x));
      for (const auto& [c, a] : z.negative) CHECK(is_integral(a));
    }
  }
}
