#pragma once

#include "kfloer/complex.hpp"
#include "kfloer/pl_function.hpp"

#include <string>
#include <vector>

namespace kfloer {

struct BreakpointBound {
  Rational location;
  std::int64_t bound = 0;
};

/// Concordance-genus lower bounds read off one PL invariant: every slope
/// is at most g_c in absolute value, and a slope jump at p/q (lowest terms)
/// forces g_c >= q for odd p, g_c >= q/2 for even p.
struct GenusBoundReport {
  std::string source;
  /// max |slope| over the pieces, exact.
  Rational max_abs_slope;
  /// ceil(max_abs_slope).
  std::int64_t slope_bound = 0;
  std::vector<BreakpointBound> breakpoint_bounds;
  std::int64_t combined = 0;
};

/// Throws DomainError for infinite f.
GenusBoundReport gc_bound_from_pl(const PLFunction& f, std::string source = "f");

/// max |i - j| over generators (invariant under U-translation).
std::int64_t diagonal_width(const ModelComplex& c);

struct GenusReport {
  std::vector<GenusBoundReport> parts;
  /// Values of t whose secondary invariant was infinite and therefore skipped.
  std::vector<Rational> skipped;
  std::int64_t combined = 0;
};

/// Combines the bounds from Upsilon and from Upsilon^2_{C,t} for each t.
GenusReport genus_report(const ModelComplex& c, const std::vector<Rational>& t_list);

}  // namespace kfloer
