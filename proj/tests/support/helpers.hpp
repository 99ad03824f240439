#pragma once

#include "kfloer/pl_function.hpp"
#include "kfloer/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace kfloer::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

/// PL function through the given (x, y) vertices, e.g. pl({{"0", "0"}, {"2", "-4"}}).
inline PLFunction pl(std::initializer_list<std::pair<const char*, const char*>> vertices) {
  std::vector<Breakpoint> pts;
  for (const auto& [x, y] : vertices) pts.push_back({q(x), q(y)});
  return PLFunction::from_points(std::move(pts));
}

/// Evaluates f on [lo, hi] at a grid of step 1/den and compares with g(x).
template <class G>
bool agrees_on(const PLFunction& f, const Rational& lo, const Rational& hi, G g, int den = 60) {
  for (Rational x = lo; x <= hi; x += Rational(1, den)) {
    if (f.evaluate(x) != ExtendedRational(g(x))) return false;
  }
  return true;
}

}  // namespace kfloer::testing
