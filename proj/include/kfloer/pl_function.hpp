#pragma once

#include "kfloer/rational.hpp"

#include <span>
#include <vector>

namespace kfloer {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

enum class Side { Left, Right };

/// Exact piecewise-linear function on [0,2].
///
/// Finite functions are stored as the list of breakpoints, starting at x = 0
/// and ending at x = 2, with every collinear interior vertex removed. This
/// canonical form makes structural equality coincide with functional
/// equality. The constant +inf and -inf functions are stored as a flag with
/// no breakpoints.
class PLFunction {
 public:
  enum class Infinity { None, Pos, Neg };

  /// One linear piece `y = intercept + slope * x` on [x0, x1].
  struct Piece {
    Rational x0, x1;
    Rational slope, intercept;
  };

  /// The zero function.
  PLFunction();

  /// Builds from samples (x strictly increasing, first 0, last 2);
  /// redundant vertices are merged. Throws DomainError otherwise.
  static PLFunction from_points(std::vector<Breakpoint> points);
  static PLFunction constant(const Rational& c);
  static PLFunction infinite(Infinity sign);

  bool is_finite() const noexcept { return infinity_ == Infinity::None; }
  Infinity infinity() const noexcept { return infinity_; }
  std::span<const Breakpoint> breakpoints() const noexcept { return points_; }

  /// Breakpoints strictly inside (0,2); these are exactly the slope jumps.
  std::vector<Rational> interior_breakpoints() const;
  std::vector<Piece> pieces() const;

  ExtendedRational evaluate(const Rational& x) const;

  /// Slope of the piece adjacent to x on the given side.
  Rational one_sided_slope(const Rational& x, Side side) const;
  /// Right slope minus left slope; x must lie in (0,2).
  Rational slope_jump(const Rational& x) const;

  /// Pointwise a*f + b. For infinite f, a must be nonzero.
  PLFunction affine(const Rational& a, const Rational& b) const;

  friend PLFunction operator+(const PLFunction& f, const PLFunction& g);
  friend PLFunction operator-(const PLFunction& f) { return f.affine(-1, 0); }
  friend PLFunction operator-(const PLFunction& f, const PLFunction& g) { return f + (-g); }

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  PLFunction(std::vector<Breakpoint> points, Infinity inf)
      : points_(std::move(points)), infinity_(inf) {}

  void require_finite(const char* op) const;

  std::vector<Breakpoint> points_;
  Infinity infinity_ = Infinity::None;
};

/// Linear interpolation of (x0,y0),(x1,y1) at x.
Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x);

}  // namespace kfloer
