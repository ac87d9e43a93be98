#pragma once

#include <vector>

#include "okbody/linalg.hpp"

namespace okb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  QVec point;  // one optimizer, in the caller's variables
};

// Exact rational LP. Variables are free unless marked nonnegative.
// Two-phase primal simplex with Bland's rule.
class LinearProgram {
 public:
  explicit LinearProgram(size_t num_vars) : nv_(num_vars), nonneg_(num_vars, false) {}

  void set_nonnegative(size_t var) { nonneg_[var] = true; }
  void add_eq(QVec coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), 0); }
  void add_ge(QVec coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), 1); }
  void add_le(QVec coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), -1); }

  LpResult maximize(const QVec& objective) const;
  LpResult minimize(const QVec& objective) const;

 private:
  struct Row {
    QVec coeffs;
    Rat rhs;
    int sense;  // 0 ==, 1 >=, -1 <=
  };
  void add(QVec coeffs, Rat rhs, int sense);

  size_t nv_;
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
};

}  // namespace okb
