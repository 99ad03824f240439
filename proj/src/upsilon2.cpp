#include "kfloer/upsilon2.hpp"

#include "kfloer/errors.hpp"
#include "threshold.hpp"

namespace kfloer {

namespace {

struct AffineSet {
  F2Vector rep;
  std::vector<F2Vector> dirs;
};

F2Vector half_plane_mask(const GradedSlice& slice, const Rational& t, const Rational& level) {
  F2Vector mask(slice.size());
  for (std::size_t k = 0; k < slice.size(); ++k) {
    if (phi(t, slice.elements[k].point) <= level) mask.set(k);
  }
  return mask;
}

F2Vector complement(const F2Vector& v) {
  F2Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.set(k, !v.get(k));
  return out;
}

// Members of the generator coset whose support lies inside `allowed`:
// z0 + B c with (z0 + B c) vanishing off `allowed`.
AffineSet cycles_supported_in(const CycleCoset& coset, const F2Vector& allowed) {
  const F2Vector outside = complement(allowed);
  F2Echelon ech(coset.slice.size());
  for (const auto& b : coset.boundaries) ech.insert(b & outside);
  auto combo = ech.express(coset.z0 & outside);
  if (!combo) throw ConsistencyError("no generator cycle inside a minimizing half-plane");
  AffineSet out{coset.z0, {}};
  for (auto k : combo->support()) out.rep ^= coset.boundaries[k];
  for (const auto& rel : ech.relations()) {
    F2Vector d(coset.slice.size());
    for (auto k : rel.support()) d ^= coset.boundaries[k];
    out.dirs.push_back(std::move(d));
  }
  return out;
}

bool same_affine(const AffineSet& a, const AffineSet& b) {
  if (a.dirs.size() != b.dirs.size()) return false;
  F2Echelon ech(a.rep.size());
  for (const auto& d : a.dirs) ech.insert(d);
  for (const auto& d : b.dirs) {
    if (!ech.contains(d)) return false;
  }
  return ech.contains(a.rep ^ b.rep);
}

std::pair<AffineSet, AffineSet> one_sided_sets(const PreparedComplex& c, const Rational& t,
                                               const Rational& delta) {
  const Rational lo = t - delta;
  const Rational hi = t + delta;
  const auto& coset = c.coset();
  return {cycles_supported_in(coset, half_plane_mask(coset.slice, lo, gamma_level(coset, lo).level)),
          cycles_supported_in(coset, half_plane_mask(coset.slice, hi, gamma_level(coset, hi).level))};
}

void require_inside(const AffineSet& z, const F2Vector& half_plane, const Rational& t) {
  const F2Vector outside = complement(half_plane);
  bool ok = !z.rep.intersects(outside);
  for (const auto& d : z.dirs) ok = ok && !d.intersects(outside);
  if (!ok) throw ConsistencyError("minimizing cycle leaves F_{t,gamma(t)} at t = " + t.str());
}

ZSets make_zsets(const PreparedComplex& c, const Rational& t, const Rational& delta) {
  auto [minus, plus] = one_sided_sets(c, t, delta);
  auto [minus2, plus2] = one_sided_sets(c, t, delta / 2);
  if (!same_affine(minus, minus2) || !same_affine(plus, plus2))
    throw ConsistencyError("Z sets change when delta is halved at t = " + t.str());

  const Rational gamma_t = gamma_level(c.coset(), t).level;
  const F2Vector h_t = half_plane_mask(c.slice0(), t, gamma_t);
  require_inside(minus, h_t, t);
  require_inside(plus, h_t, t);

  ZSets out;
  out.t = t;
  out.delta = delta;
  out.slice = c.slice0();
  F2Echelon dirs(c.slice0().size());
  for (const auto& d : minus.dirs) dirs.insert(d);
  for (const auto& d : plus.dirs) dirs.insert(d);
  out.disjoint = !dirs.contains(minus.rep ^ plus.rep);
  out.z_minus_rep = std::move(minus.rep);
  out.z_plus_rep = std::move(plus.rep);
  out.v_minus = std::move(minus.dirs);
  out.v_plus = std::move(plus.dirs);
  return out;
}

/// Everything gamma^2(s) needs, independent of s.
struct Gamma2Setup {
  Rational gamma_t;
  ZSets zsets;
  F2Vector target;
  F2Echelon base{0};
  /// Slice-1 elements outside F_{t,gamma(t)}.
  std::vector<std::size_t> outside;
  /// Target already reached inside F_{t,gamma(t)}: gamma^2 = -inf.
  bool unbounded = false;
};

Gamma2Setup prepare_gamma2(const PreparedComplex& c, const Rational& t) {
  Gamma2Setup setup;
  setup.zsets = z_sets(c, t);
  setup.gamma_t = gamma_level(c.coset(), t).level;
  setup.target = setup.zsets.z_minus_rep ^ setup.zsets.z_plus_rep;
  setup.base = F2Echelon(c.slice0().size());
  for (const auto& d : setup.zsets.v_minus) setup.base.insert(d);
  for (const auto& d : setup.zsets.v_plus) setup.base.insert(d);
  const auto& slice1 = c.slice1();
  for (std::size_t k = 0; k < slice1.size(); ++k) {
    if (phi(t, slice1.elements[k].point) <= setup.gamma_t) {
      setup.base.insert(c.d1().column(k));
    } else {
      setup.outside.push_back(k);
    }
  }
  setup.unbounded = setup.base.contains(setup.target);
  return setup;
}

LevelWitness gamma2_level(const PreparedComplex& c, const Gamma2Setup& setup, const Rational& s) {
  std::vector<detail::ThresholdItem> items;
  items.reserve(setup.outside.size());
  for (auto k : setup.outside)
    items.push_back({phi(s, c.slice1().elements[k].point), c.d1().column(k), k});
  auto found = detail::threshold_search(setup.base, setup.target, std::move(items));
  if (!found) throw ConsistencyError("Z- and Z+ are not homologous in the full complex");
  return *found;
}

void require_open_interval(const Rational& t) {
  if (!(t > 0 && t < 2)) throw DomainError("t = " + t.str() + " must lie in (0,2)");
}

}  // namespace

ZSets z_sets(const PreparedComplex& c, const Rational& t) {
  require_open_interval(t);
  return make_zsets(c, t, pivot_points(c, t).delta);
}

ZSets z_sets(const ModelComplex& c, const Rational& t) { return z_sets(PreparedComplex(c), t); }

ExtendedRational gamma2_at(const PreparedComplex& c, const Rational& t, const Rational& s) {
  require_open_interval(t);
  if (s < 0 || s > 2) throw DomainError("s = " + s.str() + " lies outside [0,2]");
  const Gamma2Setup setup = prepare_gamma2(c, t);
  if (setup.unbounded) return ExtendedRational::neg_inf();
  return gamma2_level(c, setup, s).level;
}

PLFunction gamma2(const PreparedComplex& c, const Rational& t) { return upsilon2(c, t).gamma2; }

Upsilon2Result upsilon2(const PreparedComplex& c, const Rational& t) {
  require_open_interval(t);
  const Gamma2Setup setup = prepare_gamma2(c, t);
  const PivotData pivots = pivot_points(c, t);

  Upsilon2Result out;
  out.t = t;
  out.gamma_t = setup.gamma_t;
  out.upsilon_t = -2 * setup.gamma_t;
  out.smooth_point = pivots.p_minus == pivots.p_plus;
  out.disjoint = setup.zsets.disjoint;
  if (setup.unbounded) {
    out.gamma2 = PLFunction::infinite(PLFunction::Infinity::Neg);
    out.upsilon2 = PLFunction::infinite(PLFunction::Infinity::Pos);
    return out;
  }

  std::vector<LatticePoint> pts;
  for (auto k : setup.outside) pts.push_back(c.slice1().elements[k].point);
  const std::vector<Rational> ss = crossing_parameters(pts);

  std::vector<Breakpoint> samples;
  for (const auto& s : ss) samples.push_back({s, gamma2_level(c, setup, s).level});
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const Rational mid = (samples[k - 1].x + samples[k].x) / 2;
    const LevelWitness w = gamma2_level(c, setup, mid);
    if (w.level != interpolate(samples[k - 1], samples[k], mid))
      throw ConsistencyError("gamma^2 is not linear on (" + samples[k - 1].x.str() + ", " +
                             samples[k].x.str() + ")");
    const LatticePoint p = c.slice1().elements[w.element].point;
    if (!out.witnesses.empty() && out.witnesses.back().point == p) {
      out.witnesses.back().s1 = samples[k].x;
    } else {
      out.witnesses.push_back({samples[k - 1].x, samples[k].x, p});
    }
  }
  out.gamma2 = PLFunction::from_points(std::move(samples));
  out.upsilon2 = out.gamma2.affine(-2, 2 * setup.gamma_t);
  return out;
}

Upsilon2Result upsilon2(const ModelComplex& c, const Rational& t) {
  return upsilon2(PreparedComplex(c), t);
}

ExtendedRational upsilon2_scalar(const PreparedComplex& c) {
  return upsilon2(c, 1).upsilon2.evaluate(1);
}

ExtendedRational upsilon2_scalar(const ModelComplex& c) {
  return upsilon2_scalar(PreparedComplex(c));
}

bool check_disjointness_theorem(const PreparedComplex& c, const Rational& t) {
  if (delta_upsilon_prime(c, t) <= 0) return true;
  return z_sets(c, t).disjoint;
}

bool check_disjointness_theorem(const ModelComplex& c, const Rational& t) {
  return check_disjointness_theorem(PreparedComplex(c), t);
}

SubadditivityCheck check_subadditivity(const ModelComplex& c1, const ModelComplex& c2,
                                       const Rational& t) {
  SubadditivityCheck out{0, 0, false};
  out.lhs = upsilon2(tensor(c1, c2), t).upsilon2.evaluate(t);
  const ExtendedRational a = upsilon2(c1, t).upsilon2.evaluate(t);
  const ExtendedRational b = upsilon2(c2, t).upsilon2.evaluate(t);
  out.rhs = b < a ? b : a;
  out.holds = out.lhs >= out.rhs;
  return out;
}

}  // namespace kfloer
