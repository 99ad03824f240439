#include "kfloer/bounds.hpp"

#include "kfloer/errors.hpp"
#include "kfloer/upsilon2.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace kfloer {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max()) throw DomainError("bound exceeds int64 range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

GenusBoundReport gc_bound_from_pl(const PLFunction& f, std::string source) {
  if (!f.is_finite()) throw DomainError("genus bound of an infinite function");
  GenusBoundReport out;
  out.source = std::move(source);
  for (const auto& piece : f.pieces()) out.max_abs_slope = max(out.max_abs_slope, piece.slope.abs());
  out.slope_bound = to_int64(out.max_abs_slope.ceil());
  out.combined = out.slope_bound;
  for (const auto& x : f.interior_breakpoints()) {
    const bool odd_numerator = x.num() % 2 != 0;
    const BigInt q = x.den();
    const std::int64_t bound = to_int64(odd_numerator ? q : Rational(q, 2).ceil());
    out.breakpoint_bounds.push_back({x, bound});
    out.combined = std::max(out.combined, bound);
  }
  return out;
}

std::int64_t diagonal_width(const ModelComplex& c) {
  std::int64_t width = 0;
  for (const auto& g : c.generators()) width = std::max(width, std::abs(g.point.i - g.point.j));
  return width;
}

GenusReport genus_report(const ModelComplex& c, const std::vector<Rational>& t_list) {
  const PreparedComplex prepared(c);
  GenusReport out;
  out.parts.push_back(gc_bound_from_pl(upsilon(prepared), "Upsilon"));
  for (const auto& t : t_list) {
    const Upsilon2Result r = upsilon2(prepared, t);
    if (!r.upsilon2.is_finite()) {
      out.skipped.push_back(t);
      continue;
    }
    out.parts.push_back(gc_bound_from_pl(r.upsilon2, "Upsilon2[t=" + t.str() + "]"));
  }
  for (const auto& p : out.parts) out.combined = std::max(out.combined, p.combined);
  return out;
}

}  // namespace kfloer
