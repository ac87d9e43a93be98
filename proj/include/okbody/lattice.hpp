#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "okbody/linalg.hpp"

namespace okb {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for surfaces where a criterion of the implemented theory is not
// available (X_7, X_8).
struct TheoryLimitedError : DomainError {
  using DomainError::DomainError;
};

struct NotEffectiveError : DomainError {
  using DomainError::DomainError;
};

enum class SurfaceKind { XR, L3, S6 };

// Integer divisor class in the basis H, E_1, ..., E_r.
struct DivisorClass {
  IVec coords;

  DivisorClass() = default;
  explicit DivisorClass(IVec c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<int> c) {
    for (int x : c) coords.push_back(x);
  }

  auto operator<=>(const DivisorClass&) const = default;
};

// Rational divisor class, same basis.
struct QDivisor {
  QVec coords;

  QDivisor() = default;
  explicit QDivisor(QVec c) : coords(std::move(c)) {}
  explicit QDivisor(const DivisorClass& d) : coords(to_qvec(d.coords)) {}

  auto operator<=>(const QDivisor&) const = default;
};

QDivisor operator+(const QDivisor& a, const QDivisor& b);
QDivisor operator-(const QDivisor& a, const QDivisor& b);
QDivisor operator*(const Rat& s, const QDivisor& d);

struct SurfaceModel {
  SurfaceKind kind;
  int r;     // blown-up points: 1..8 for XR, 4 for L3, 6 for S6
  int rank;  // r + 1
  std::vector<IVec> gram;
  std::vector<DivisorClass> negative_curves;
  // Extremal rays of the pseudo-effective cone. Identical to negative_curves
  // except on X_1, where the ruling fiber H-E_1 is the second ray.
  std::vector<DivisorClass> eff_generators;
  DivisorClass canonical;

  std::string name() const;
};

SurfaceModel make_surface(SurfaceKind kind, int r = 0);
SurfaceModel make_surface(const std::string& name);  // "X1".."X8", "L3", "S6"

// "2H-E_1-E_2" style display of a class in the H, E_1, .. basis.
std::string class_string(const DivisorClass& d);

Rat intersect(const SurfaceModel& s, const QDivisor& d, const QDivisor& e);
Rat intersect(const SurfaceModel& s, const QDivisor& d, const DivisorClass& e);
Int intersect(const SurfaceModel& s, const DivisorClass& d, const DivisorClass& e);

bool is_nef(const SurfaceModel& s, const QDivisor& d);
bool is_effective(const SurfaceModel& s, const QDivisor& d);

Int genus(const SurfaceModel& s, const DivisorClass& c);

// Property (g) for X_r, r <= 6; on L3/S6 restricted to the listed negative
// curves and big-and-nef classes.
bool is_irreducible_class(const SurfaceModel& s, const DivisorClass& d);

inline QDivisor anticanonical(const SurfaceModel& s) {
  QVec v(s.rank);
  for (int i = 0; i < s.rank; ++i) v[i] = -Rat(s.canonical.coords[i]);
  return QDivisor(std::move(v));
}

inline bool is_zero(const QDivisor& d) {
  for (const auto& x : d.coords)
    if (x != 0) return false;
  return true;
}

}  // namespace okb
