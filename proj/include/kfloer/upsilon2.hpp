#pragma once

#include "kfloer/upsilon.hpp"

#include <vector>

namespace kfloer {

/// One-sided minimizing cycle sets at t, as affine subspaces of the
/// grading-0 slice: Z- = z_minus_rep + span(v_minus), likewise Z+.
struct ZSets {
  Rational t;
  Rational delta;
  GradedSlice slice;
  F2Vector z_minus_rep;
  F2Vector z_plus_rep;
  std::vector<F2Vector> v_minus;
  std::vector<F2Vector> v_plus;
  bool disjoint = false;
};

/// Z- and Z+ at t in (0,2). Re-derived with delta/2 and compared; a change
/// raises ConsistencyError.
ZSets z_sets(const PreparedComplex& c, const Rational& t);
ZSets z_sets(const ModelComplex& c, const Rational& t);

/// Lattice point carrying the connecting chain on one piece of gamma^2.
struct Gamma2Witness {
  Rational s0, s1;
  LatticePoint point;
};

struct Upsilon2Result {
  Rational t;
  Rational gamma_t;
  /// Upsilon_C(t).
  Rational upsilon_t;
  /// p- == p+: Upsilon is linear at t and the result is the literal definition
  /// evaluated at a smooth point.
  bool smooth_point = false;
  bool disjoint = false;
  /// gamma^2_{C,t}(s) as a function of s; constant -inf when Z+- meet.
  PLFunction gamma2;
  /// Upsilon^2_{C,t}(s) = -2 (gamma^2(s) - gamma(t)); constant +inf when Z+- meet.
  PLFunction upsilon2;
  /// Empty when infinite.
  std::vector<Gamma2Witness> witnesses;
};

/// gamma^2 at a single s, by the threshold search (NEG_INF when Z+- meet or
/// are already homologous inside F_{t,gamma(t)}).
ExtendedRational gamma2_at(const PreparedComplex& c, const Rational& t, const Rational& s);

/// gamma^2_{C,t} as a PL function in s (constant -inf when Z+- meet).
PLFunction gamma2(const PreparedComplex& c, const Rational& t);

Upsilon2Result upsilon2(const PreparedComplex& c, const Rational& t);
Upsilon2Result upsilon2(const ModelComplex& c, const Rational& t);

/// The scalar Upsilon^2_{C,1}(1).
ExtendedRational upsilon2_scalar(const PreparedComplex& c);
ExtendedRational upsilon2_scalar(const ModelComplex& c);

/// True iff the slope jump of Upsilon at t is <= 0 or Z+- are disjoint.
bool check_disjointness_theorem(const PreparedComplex& c, const Rational& t);
bool check_disjointness_theorem(const ModelComplex& c, const Rational& t);

struct SubadditivityCheck {
  ExtendedRational lhs;  // Upsilon^2_{C1 (x) C2, t}(t)
  ExtendedRational rhs;  // min(Upsilon^2_{C1,t}(t), Upsilon^2_{C2,t}(t))
  bool holds = false;
};

/// Evaluates the tensor subadditivity inequality at s = t.
SubadditivityCheck check_subadditivity(const ModelComplex& c1, const ModelComplex& c2,
                                       const Rational& t);

}  // namespace kfloer
