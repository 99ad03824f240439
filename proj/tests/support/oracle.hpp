#pragma once

// Brute-force reference values straight from the definitions: every cycle,
// boundary and chain of the small slices is enumerated as a bit mask. Shares
// only the data types and Rational with the engine.

#include "kfloer/complex.hpp"
#include "kfloer/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace kfloer::oracle {

struct Slice {
  std::vector<LatticePoint> points;
  std::vector<std::int64_t> index_of;  // generator -> position, -1 if other parity
  std::vector<std::int64_t> shift;     // generator -> U power of its slice element
};

inline Slice make_slice(const ModelComplex& c, std::int64_t g) {
  Slice s;
  s.index_of.assign(c.size(), -1);
  s.shift.assign(c.size(), 0);
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto& gen = c.generator(x);
    const std::int64_t diff = gen.grading - g;
    if (diff % 2 != 0) continue;
    const std::int64_t k = diff / 2;
    s.index_of[x] = static_cast<std::int64_t>(s.points.size());
    s.shift[x] = k;
    s.points.push_back({gen.point.i - k, gen.point.j - k});
  }
  return s;
}

/// Boundary of each element of slice g as a mask over slice g-1.
inline std::vector<std::uint32_t> boundary_masks(const ModelComplex& c, const Slice& from,
                                                 const Slice& to) {
  std::vector<std::uint32_t> cols(from.points.size(), 0);
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (from.index_of[x] < 0) continue;
    for (const auto& t : c.boundary(x)) {
      // U^k x maps to U^(k+u) y; that lands in slice g-1 exactly when
      // y's slice element there carries that power.
      if (to.index_of[t.target] < 0 || to.shift[t.target] != from.shift[x] + t.u_power) continue;
      cols[static_cast<std::size_t>(from.index_of[x])] ^= 1u << to.index_of[t.target];
    }
  }
  return cols;
}

inline std::uint32_t image(const std::vector<std::uint32_t>& cols, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (mask >> k & 1u) out ^= cols[k];
  return out;
}

inline Rational weight(const Rational& t, const LatticePoint& p) {
  return t / 2 * Rational(p.j) + (Rational(1) - t / 2) * Rational(p.i);
}

/// Small enough to enumerate: slices 0 and 1 each have at most `limit` elements.
struct Model {
  Slice s0, s1;
  std::vector<std::uint32_t> d1;              // slice 1 -> slice 0
  std::vector<std::uint32_t> generator_coset;  // grading-0 cycles in the nonzero class
};

inline std::optional<Model> build(const ModelComplex& c, std::size_t limit = 16) {
  Model m;
  m.s0 = make_slice(c, 0);
  m.s1 = make_slice(c, 1);
  if (m.s0.points.size() > limit || m.s1.points.size() > limit) return std::nullopt;
  const Slice sm = make_slice(c, -1);
  const auto d0 = boundary_masks(c, m.s0, sm);
  m.d1 = boundary_masks(c, m.s1, m.s0);
  std::unordered_set<std::uint32_t> boundaries;
  for (std::uint32_t y = 0; y < (1u << m.s1.points.size()); ++y) boundaries.insert(image(m.d1, y));
  for (std::uint32_t z = 1; z < (1u << m.s0.points.size()); ++z)
    if (image(d0, z) == 0 && !boundaries.contains(z)) m.generator_coset.push_back(z);
  return m;
}

inline Rational level(const std::vector<LatticePoint>& pts, std::uint32_t mask, const Rational& t) {
  std::optional<Rational> best;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (mask >> k & 1u) {
      const Rational v = weight(t, pts[k]);
      if (!best || v > *best) best = v;
    }
  return *best;
}

/// gamma(t): min over every cycle in the class of the max level of its support.
inline Rational gamma(const Model& m, const Rational& t) {
  std::optional<Rational> best;
  for (auto z : m.generator_coset) {
    const Rational v = level(m.s0.points, z, t);
    if (!best || v < *best) best = v;
  }
  return *best;
}

/// Cycles of the class realizing gamma at parameter t.
inline std::vector<std::uint32_t> minimizers(const Model& m, const Rational& t) {
  const Rational g = gamma(m, t);
  std::vector<std::uint32_t> out;
  for (auto z : m.generator_coset)
    if (level(m.s0.points, z, t) <= g) out.push_back(z);
  return out;
}

/// gamma^2_t(s); nullopt encodes -infinity. One-sided sets use t -+ delta.
inline std::optional<Rational> gamma2(const Model& m, const Rational& t, const Rational& s,
                                      const Rational& delta = Rational(1, 1000)) {
  const auto zm = minimizers(m, t - delta);
  const auto zp = minimizers(m, t + delta);
  std::unordered_set<std::uint32_t> targets;
  for (auto a : zm)
    for (auto b : zp) targets.insert(a ^ b);
  if (targets.contains(0)) return std::nullopt;
  const Rational gt = gamma(m, t);
  std::optional<Rational> best;
  const auto n1 = m.s1.points.size();
  for (std::uint32_t y = 0; y < (1u << n1); ++y) {
    if (!targets.contains(image(m.d1, y))) continue;
    // Cost: largest phi_s among the chain's elements outside F_{t, gamma(t)}.
    std::optional<Rational> cost;
    for (std::size_t k = 0; k < n1; ++k) {
      if (!(y >> k & 1u) || weight(t, m.s1.points[k]) <= gt) continue;
      const Rational v = weight(s, m.s1.points[k]);
      if (!cost || v > *cost) cost = v;
    }
    if (!cost) return std::nullopt;
    if (!best || *cost < *best) best = cost;
  }
  return best;
}

}  // namespace kfloer::oracle
