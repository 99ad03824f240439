#pragma once

#include "kfloer/complex.hpp"
#include "kfloer/pl_function.hpp"
#include "kfloer/rational.hpp"

#include <span>
#include <vector>

namespace kfloer {

/// phi_t(p) = (t/2) j + (1 - t/2) i, the level of p for the half-plane family at slope 1 - 2/t.
Rational phi(const Rational& t, const LatticePoint& p);

/// Sorted parameters t in (0,2) at which phi_t separates some pair of the
/// given points, with 0 and 2 prepended/appended. Between consecutive
/// values the phi-order of the points is constant.
std::vector<Rational> crossing_parameters(std::span<const LatticePoint> points);

/// Result of a min-max threshold search.
struct LevelWitness {
  Rational level;
  /// Index into the slice of an element sitting exactly at `level`.
  std::size_t element = 0;
};

/// min over z in the coset of max over supp(z) of phi_t. No validation;
/// `coset` must come from generator_coset().
LevelWitness gamma_level(const CycleCoset& coset, const Rational& t);

/// Slice data of a validated K-complex, computed once and shared by the
/// engine entry points.
class PreparedComplex {
 public:
  /// Throws InvalidComplexError unless validate(c) accepts c as a K-complex.
  explicit PreparedComplex(ModelComplex c);

  const ModelComplex& complex() const noexcept { return complex_; }
  const CycleCoset& coset() const noexcept { return coset_; }
  const GradedSlice& slice0() const noexcept { return coset_.slice; }
  const GradedSlice& slice1() const noexcept { return slice1_; }
  /// Boundary map slice 1 -> slice 0.
  const F2Matrix& d1() const noexcept { return d1_; }
  /// Distinct lattice points of the grading-0 slice, sorted.
  const std::vector<LatticePoint>& points0() const noexcept { return points0_; }
  /// crossing_parameters(points0()).
  const std::vector<Rational>& breakpoint_candidates() const noexcept { return candidates_; }

 private:
  ModelComplex complex_;
  CycleCoset coset_;
  GradedSlice slice1_;
  F2Matrix d1_;
  std::vector<LatticePoint> points0_;
  std::vector<Rational> candidates_;
};

Rational gamma_at(const PreparedComplex& c, const Rational& t);
Rational gamma_at(const ModelComplex& c, const Rational& t);

/// Upsilon_C(t) = -2 gamma_C(t) as an exact PL function on [0,2].
PLFunction upsilon(const PreparedComplex& c);
PLFunction upsilon(const ModelComplex& c);

struct PivotData {
  Rational t;
  Rational gamma_t;
  /// Distinct grading-0 lattice points on the support line phi_t = gamma(t).
  std::vector<LatticePoint> on_line;
  LatticePoint p_minus;
  LatticePoint p_plus;
  /// One-sided margin: the phi-order of all grading-0 points is constant on
  /// (t - 2 delta, t) and on (t, t + 2 delta).
  Rational delta;
};

/// Pivot points at t in (0,2).
PivotData pivot_points(const PreparedComplex& c, const Rational& t);
PivotData pivot_points(const ModelComplex& c, const Rational& t);

/// Right minus left slope of Upsilon at t in (0,2). Cross-checked against
/// (2/t)(i(p+) - i(p-)); a mismatch raises ConsistencyError.
Rational delta_upsilon_prime(const PreparedComplex& c, const Rational& t);
Rational delta_upsilon_prime(const ModelComplex& c, const Rational& t);

}  // namespace kfloer
