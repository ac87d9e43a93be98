#include "okbody/linalg.hpp"

#include <cassert>

namespace okb {

Rat dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
  const size_t n = a.size();
  assert(b.size() == n);
  for (auto& row : a) assert(row.size() == n);

  // Gaussian elimination with exact pivoting on the first nonzero entry.
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (size_t i = n; i-- > 0;) {
    Rat s = b[i];
    for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

int rank_of(QMat a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

IVec primitive(IVec v) {
  Int g = 0;
  for (const auto& x : v) g = int_gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IVec primitive(const QVec& v) {
  Int l = 1;
  for (const auto& q : v) l = int_lcm(l, denominator(q));
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  return primitive(std::move(out));
}

}  // namespace okb
