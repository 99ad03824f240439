#include "kfloer/pl_function.hpp"

#include "kfloer/errors.hpp"

#include <algorithm>

namespace kfloer {

namespace {

const Rational kLeft = 0;
const Rational kRight = 2;

void check_domain(const Rational& x) {
  if (x < kLeft || x > kRight) throw DomainError("x = " + x.str() + " lies outside [0,2]");
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  if (a.x == b.x) return a.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

PLFunction::PLFunction() : points_{{0, 0}, {2, 0}} {}

PLFunction PLFunction::from_points(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw DomainError("a PL function needs at least two breakpoints");
  if (points.front().x != kLeft || points.back().x != kRight)
    throw DomainError("PL breakpoints must start at 0 and end at 2");
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(points[k - 1].x < points[k].x))
      throw DomainError("PL breakpoints must be strictly increasing");
  }
  std::vector<Breakpoint> merged;
  merged.reserve(points.size());
  for (auto& p : points) {
    while (merged.size() >= 2 && collinear(merged[merged.size() - 2], merged.back(), p))
      merged.pop_back();
    merged.push_back(std::move(p));
  }
  return PLFunction(std::move(merged), Infinity::None);
}

PLFunction PLFunction::constant(const Rational& c) {
  return PLFunction({{kLeft, c}, {kRight, c}}, Infinity::None);
}

PLFunction PLFunction::infinite(Infinity sign) {
  if (sign == Infinity::None) return PLFunction();
  return PLFunction({}, sign);
}

void PLFunction::require_finite(const char* op) const {
  if (!is_finite()) throw DomainError(std::string(op) + " of an infinite PL function");
}

std::vector<Rational> PLFunction::interior_breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k + 1 < points_.size(); ++k) out.push_back(points_[k].x);
  return out;
}

std::vector<PLFunction::Piece> PLFunction::pieces() const {
  require_finite("pieces");
  std::vector<Piece> out;
  for (std::size_t k = 1; k < points_.size(); ++k) {
    const auto& a = points_[k - 1];
    const auto& b = points_[k];
    Rational slope = (b.y - a.y) / (b.x - a.x);
    out.push_back({a.x, b.x, slope, a.y - slope * a.x});
  }
  return out;
}

ExtendedRational PLFunction::evaluate(const Rational& x) const {
  check_domain(x);
  if (infinity_ == Infinity::Pos) return ExtendedRational::pos_inf();
  if (infinity_ == Infinity::Neg) return ExtendedRational::neg_inf();
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  return interpolate(*(it - 1), *it, x);
}

Rational PLFunction::one_sided_slope(const Rational& x, Side side) const {
  require_finite("one_sided_slope");
  check_domain(x);
  if ((side == Side::Left && x == kLeft) || (side == Side::Right && x == kRight))
    throw DomainError("no " + std::string(side == Side::Left ? "left" : "right") +
                      " slope at x = " + x.str());
  // Index of the piece [points_[k-1], points_[k]] on the requested side.
  std::size_t k = 1;
  while (k < points_.size() &&
         (side == Side::Left ? points_[k].x < x : points_[k].x <= x))
    ++k;
  const auto& a = points_[k - 1];
  const auto& b = points_[k];
  return (b.y - a.y) / (b.x - a.x);
}

Rational PLFunction::slope_jump(const Rational& x) const {
  if (!(kLeft < x && x < kRight)) throw DomainError("slope jump needs x in (0,2)");
  return one_sided_slope(x, Side::Right) - one_sided_slope(x, Side::Left);
}

PLFunction PLFunction::affine(const Rational& a, const Rational& b) const {
  if (!is_finite()) {
    if (a.sign() == 0) throw DomainError("0 * infinity is undefined");
    if (a.sign() > 0) return *this;
    return infinite(infinity_ == Infinity::Pos ? Infinity::Neg : Infinity::Pos);
  }
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({p.x, a * p.y + b});
  return from_points(std::move(out));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  if (!f.is_finite() || !g.is_finite()) {
    if (f.is_finite()) return g;
    if (g.is_finite()) return f;
    if (f.infinity() != g.infinity()) throw DomainError("+inf + -inf is undefined");
    return f;
  }
  std::vector<Rational> xs;
  for (const auto& p : f.points_) xs.push_back(p.x);
  for (const auto& p : g.points_) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back({x, f.evaluate(x).value() + g.evaluate(x).value()});
  return PLFunction::from_points(std::move(out));
}

}  // namespace kfloer
