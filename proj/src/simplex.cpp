#include "okbody/simplex.hpp"

#include <cassert>
#include <limits>

namespace okb {

namespace {

struct Tableau {
  QMat a;                     // m x n, equals B^{-1} A
  QVec b;                     // m, equals B^{-1} b, always >= 0
  QVec cost;                  // reduced cost row (maximization)
  Rat z;                      // current objective value
  std::vector<size_t> basis;  // m basic column indices

  size_t rows() const { return a.size(); }
  size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(size_t r, size_t c) {
    Rat p = a[r][c];
    for (auto& x : a[r]) x /= p;
    b[r] /= p;
    for (size_t i = 0; i < rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      z += f * b[r];
      for (size_t j = 0; j < cols(); ++j) cost[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule; returns false on unboundedness.
  bool run() {
    for (;;) {
      size_t enter = cols();
      for (size_t j = 0; j < cols(); ++j)
        if (cost[j] > 0) {
          enter = j;
          break;
        }
      if (enter == cols()) return true;
      size_t leave = rows();
      Rat best;
      for (size_t i = 0; i < rows(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave == rows() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

void LinearProgram::add(QVec coeffs, Rat rhs, int sense) {
  assert(coeffs.size() == nv_);
  rows_.push_back({std::move(coeffs), std::move(rhs), sense});
}

LpResult LinearProgram::maximize(const QVec& objective) const {
  assert(objective.size() == nv_);
  const size_t m = rows_.size();
  if (m == 0) {
    // empty tableau: x = 0 is optimal unless some coordinate direction improves
    for (size_t v = 0; v < nv_; ++v)
      if (objective[v] > 0 || (objective[v] != 0 && !nonneg_[v]))
        return {LpStatus::Unbounded, Rat(0), {}};
    return {LpStatus::Optimal, Rat(0), QVec(nv_, Rat(0))};
  }

  // Map caller variables to standard-form columns: nonnegative variables get
  // one column, free variables a plus/minus pair. Then one slack per
  // inequality and one artificial per row.
  std::vector<std::pair<size_t, size_t>> vmap(nv_);  // (plus col, minus col or npos)
  constexpr size_t npos = std::numeric_limits<size_t>::max();
  size_t ncols = 0;
  for (size_t v = 0; v < nv_; ++v) {
    vmap[v].first = ncols++;
    vmap[v].second = nonneg_[v] ? npos : ncols++;
  }
  const size_t slack0 = ncols;
  for (const auto& r : rows_)
    if (r.sense != 0) ++ncols;
  const size_t art0 = ncols;
  ncols += m;

  Tableau t;
  t.a.assign(m, QVec(ncols, Rat(0)));
  t.b.assign(m, Rat(0));
  t.basis.assign(m, 0);
  size_t slack = slack0;
  for (size_t i = 0; i < m; ++i) {
    const auto& r = rows_[i];
    int flip = r.rhs < 0 ? -1 : 1;
    for (size_t v = 0; v < nv_; ++v) {
      Rat c = flip * r.coeffs[v];
      t.a[i][vmap[v].first] = c;
      if (vmap[v].second != npos) t.a[i][vmap[v].second] = -c;
    }
    if (r.sense != 0) t.a[i][slack++] = Rat(flip * -r.sense);
    t.b[i] = flip * r.rhs;
    t.a[i][art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase 1: maximize minus the sum of artificials.
  t.cost.assign(ncols, Rat(0));
  t.z = 0;
  for (size_t i = 0; i < m; ++i) {
    t.z -= t.b[i];
    for (size_t j = 0; j < art0; ++j) t.cost[j] += t.a[i][j];
  }
  bool ok = t.run();
  assert(ok);  // phase 1 objective is bounded by 0
  (void)ok;
  if (t.z < 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Remove artificials from the basis, dropping redundant rows.
  for (size_t i = 0; i < t.rows();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    size_t c = art0;
    for (size_t j = 0; j < art0; ++j)
      if (t.a[i][j] != 0) {
        c = j;
        break;
      }
    if (c < art0) {
      t.pivot(i, c);
      ++i;
    } else {
      t.a.erase(t.a.begin() + i);
      t.b.erase(t.b.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  for (auto& row : t.a) row.resize(art0);

  // Phase 2 with the real objective.
  QVec c(art0, Rat(0));
  for (size_t v = 0; v < nv_; ++v) {
    c[vmap[v].first] = objective[v];
    if (vmap[v].second != npos) c[vmap[v].second] = -objective[v];
  }
  t.cost = c;
  t.z = 0;
  for (size_t i = 0; i < t.rows(); ++i) {
    Rat cb = c[t.basis[i]];
    if (cb == 0) continue;
    t.z += cb * t.b[i];
    for (size_t j = 0; j < art0; ++j) t.cost[j] -= cb * t.a[i][j];
  }
  for (size_t i = 0; i < t.rows(); ++i) t.cost[t.basis[i]] = 0;
  if (!t.run()) return {LpStatus::Unbounded, Rat(0), {}};

  QVec std_x(art0, Rat(0));
  for (size_t i = 0; i < t.rows(); ++i) std_x[t.basis[i]] = t.b[i];
  QVec x(nv_);
  for (size_t v = 0; v < nv_; ++v) {
    x[v] = std_x[vmap[v].first];
    if (vmap[v].second != npos) x[v] -= std_x[vmap[v].second];
  }
  return {LpStatus::Optimal, t.z, std::move(x)};
}

LpResult LinearProgram::minimize(const QVec& objective) const {
  QVec neg(objective.size());
  for (size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  LpResult r = maximize(neg);
  r.objective = -r.objective;
  return r;
}

}  // namespace okb
