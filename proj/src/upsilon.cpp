#include "kfloer/upsilon.hpp"

#include "kfloer/errors.hpp"
#include "kfloer/validate.hpp"
#include "threshold.hpp"

#include <algorithm>

namespace kfloer {

Rational phi(const Rational& t, const LatticePoint& p) {
  const Rational half = t / 2;
  return half * p.j + (1 - half) * p.i;
}

std::vector<Rational> crossing_parameters(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // phi_t(p) = i + (t/2)(j - i); two lines cross where
  // t = 2 (i_q - i_p) / ((j_p - i_p) - (j_q - i_q)).
  std::vector<Rational> out{0, 2};
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const std::int64_t dp = pts[a].j - pts[a].i;
      const std::int64_t dq = pts[b].j - pts[b].i;
      if (dp == dq) continue;
      Rational t(BigInt(2 * (pts[b].i - pts[a].i)), BigInt(dp - dq));
      if (t > 0 && t < 2) out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LevelWitness gamma_level(const CycleCoset& coset, const Rational& t) {
  const std::size_t n = coset.slice.size();
  F2Echelon base(n);
  for (const auto& b : coset.boundaries) base.insert(b);
  std::vector<detail::ThresholdItem> items;
  items.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    items.push_back({phi(t, coset.slice.elements[k].point), F2Vector::with_ones(n, {k}), k});
  }
  auto found = detail::threshold_search(std::move(base), coset.z0, std::move(items));
  if (!found) throw ConsistencyError("generator class not reached by the full grading-0 slice");
  return *found;
}

PreparedComplex::PreparedComplex(ModelComplex c) : complex_(std::move(c)) {
  require_kcomplex(complex_);
  coset_ = generator_coset(complex_);
  slice1_ = grading_slice(complex_, 1);
  d1_ = slice_boundary(complex_, 1);
  for (const auto& el : coset_.slice.elements) points0_.push_back(el.point);
  std::sort(points0_.begin(), points0_.end());
  points0_.erase(std::unique(points0_.begin(), points0_.end()), points0_.end());
  candidates_ = crossing_parameters(points0_);
}

namespace {

void require_closed_interval(const Rational& t) {
  if (t < 0 || t > 2) throw DomainError("t = " + t.str() + " lies outside [0,2]");
}

void require_open_interval(const Rational& t) {
  if (!(t > 0 && t < 2)) throw DomainError("t = " + t.str() + " must lie in (0,2)");
}

}  // namespace

Rational gamma_at(const PreparedComplex& c, const Rational& t) {
  require_closed_interval(t);
  return gamma_level(c.coset(), t).level;
}

Rational gamma_at(const ModelComplex& c, const Rational& t) {
  return gamma_at(PreparedComplex(c), t);
}

PLFunction upsilon(const PreparedComplex& c) {
  const auto& ts = c.breakpoint_candidates();
  std::vector<Breakpoint> samples;
  samples.reserve(ts.size());
  for (const auto& t : ts) samples.push_back({t, -2 * gamma_level(c.coset(), t).level});
  // Between candidates the minimizing prefix is fixed, so Upsilon is linear there.
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const Rational mid = (samples[k - 1].x + samples[k].x) / 2;
    if (-2 * gamma_level(c.coset(), mid).level != interpolate(samples[k - 1], samples[k], mid))
      throw ConsistencyError("Upsilon is not linear on (" + samples[k - 1].x.str() + ", " +
                             samples[k].x.str() + ")");
  }
  return PLFunction::from_points(std::move(samples));
}

PLFunction upsilon(const ModelComplex& c) { return upsilon(PreparedComplex(c)); }

PivotData pivot_points(const PreparedComplex& c, const Rational& t) {
  require_open_interval(t);
  const auto& ts = c.breakpoint_candidates();
  auto next = std::upper_bound(ts.begin(), ts.end(), t);
  auto prev = std::lower_bound(ts.begin(), ts.end(), t) - 1;
  PivotData out;
  out.t = t;
  out.delta = min(t - *prev, *next - t) / 2;
  out.gamma_t = gamma_level(c.coset(), t).level;
  for (const auto& p : c.points0()) {
    if (phi(t, p) == out.gamma_t) out.on_line.push_back(p);
  }
  const auto& elements = c.slice0().elements;
  out.p_minus = elements[gamma_level(c.coset(), t - out.delta).element].point;
  out.p_plus = elements[gamma_level(c.coset(), t + out.delta).element].point;
  if (phi(t, out.p_minus) != out.gamma_t || phi(t, out.p_plus) != out.gamma_t)
    throw ConsistencyError("pivot point off the support line at t = " + t.str());
  return out;
}

PivotData pivot_points(const ModelComplex& c, const Rational& t) {
  return pivot_points(PreparedComplex(c), t);
}

Rational delta_upsilon_prime(const PreparedComplex& c, const Rational& t) {
  require_open_interval(t);
  const Rational jump = upsilon(c).slope_jump(t);
  const PivotData pivots = pivot_points(c, t);
  const Rational predicted = Rational(2) / t * (pivots.p_plus.i - pivots.p_minus.i);
  if (jump != predicted)
    throw ConsistencyError("slope jump " + jump.str() + " at t = " + t.str() +
                           " disagrees with pivot prediction " + predicted.str());
  return jump;
}

Rational delta_upsilon_prime(const ModelComplex& c, const Rational& t) {
  return delta_upsilon_prime(PreparedComplex(c), t);
}

}  // namespace kfloer
