#pragma once

#include "kfloer/complex.hpp"

#include <string>
#include <vector>

namespace kfloer {

/// Step lengths [a1, ..., a2m]: odd entries are horizontal, even vertical.
using StepVector = std::vector<std::int64_t>;

/// Staircase complex. Starts at (0, a2 + a4 + ...), odd steps move right,
/// even steps move down. Grading-0 generators a1..a(m+1) sit at the start
/// and after each even step; grading-1 generators b1..bm after each odd
/// step, with d(bk) = ak + a(k+1).
ModelComplex stairway(const StepVector& steps);

/// Staircase steps of the torus knot T(p,q), read off the exponents of
/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
StepVector torus_knot_steps(std::int64_t p, std::int64_t q);
ModelComplex torus_knot_complex(std::int64_t p, std::int64_t q);

/// The square complex K_n: A(-n,n), B(0,0), C(n,-n) in grading 0,
/// X(n,n) in grading 1 with dX = A + C, u(-n,-n) in grading -1 with
/// dA = dB = dC = u.
ModelComplex box_complex(std::int64_t n);

/// Four grading-0 generators on the line i + j = -2 whose one-sided
/// minimizers a+b and c+d are joined by e(1,1); Upsilon has a negative
/// slope jump at t = 1.
ModelComplex figure6_complex();

/// Thin model of the figure-eight knot: an isolated generator at (0,0)
/// plus a unit acyclic square whose bottom-left corner is also at (0,0).
ModelComplex figure8_complex();

/// c (+) a square acyclic summand with bottom-left corner `corner` (grading
/// `grading`) and side `size`: top-right T maps to left L and bottom R,
/// both of which map to bottom-left D.
ModelComplex add_acyclic_box(const ModelComplex& c, LatticePoint corner, std::int64_t size,
                             std::int64_t grading = 0);

/// stairway([2 x 2n]) (x) dual(stairway([1 x 4n])).
ModelComplex nk_complex(int n);

/// Named complexes: unknot, T(3,4), T(2,5), T(4,5), T(5,7), fig8, hom-C1,
/// hom-C2, hom-K, box(n), figure6, nK(n). Throws DomainError listing the
/// valid names otherwise.
ModelComplex catalog(const std::string& name);

/// Representative names (box(n) and nK(n) instantiated at small n).
std::vector<std::string> catalog_names();

ModelComplex unknot();

}  // namespace kfloer
