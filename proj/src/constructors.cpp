#include "kfloer/constructors.hpp"

#include "kfloer/errors.hpp"

#include <numeric>
#include <regex>

namespace kfloer {

ModelComplex unknot() { return ModelComplex::Builder().generator("a", 0, {0, 0}).build(); }

ModelComplex stairway(const StepVector& steps) {
  if (steps.empty() || steps.size() % 2 != 0)
    throw DomainError("a stairway needs a nonempty even number of steps");
  std::int64_t height = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] <= 0) throw DomainError("stairway steps must be positive");
    if (k % 2 == 1) height += steps[k];
  }
  ModelComplex::Builder b;
  LatticePoint p{0, height};
  b.generator("a1", 0, p);
  for (std::size_t k = 0; k < steps.size(); k += 2) {
    const std::size_t m = k / 2 + 1;
    p.i += steps[k];
    b.generator("b" + std::to_string(m), 1, p);
    p.j -= steps[k + 1];
    b.generator("a" + std::to_string(m + 1), 0, p);
    b.arrow("b" + std::to_string(m), "a" + std::to_string(m));
    b.arrow("b" + std::to_string(m), "a" + std::to_string(m + 1));
  }
  return b.build();
}

StepVector torus_knot_steps(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw DomainError("torus knot parameters must be at least 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
  if (p * q > 100000) throw DomainError("torus knot too large");
  const std::size_t pq = static_cast<std::size_t>(p * q);
  // Coefficients indexed by exponent.
  std::vector<std::int64_t> num(pq + 2, 0);
  num[pq + 1] += 1;
  num[pq] -= 1;
  num[1] -= 1;
  num[0] += 1;
  std::vector<std::int64_t> den(static_cast<std::size_t>(p + q) + 1, 0);
  den[static_cast<std::size_t>(p + q)] += 1;
  den[static_cast<std::size_t>(p)] -= 1;
  den[static_cast<std::size_t>(q)] -= 1;
  den[0] += 1;

  const std::size_t dd = den.size() - 1;
  const std::size_t qdeg = num.size() - 1 - dd;
  std::vector<std::int64_t> quot(qdeg + 1, 0);
  for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
    const std::int64_t coef = num[k];  // den is monic
    if (coef == 0) continue;
    quot[k - dd] = coef;
    for (std::size_t m = 0; m <= dd; ++m) num[k - dd + m] -= coef * den[m];
  }
  for (auto r : num) {
    if (r != 0) throw ConsistencyError("torus knot polynomial division left a remainder");
  }
  std::vector<std::int64_t> exponents;
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (quot[k] != 0) exponents.push_back(static_cast<std::int64_t>(k));
  }
  StepVector steps;
  for (std::size_t k = 1; k < exponents.size(); ++k) steps.push_back(exponents[k - 1] - exponents[k]);
  return steps;
}

ModelComplex torus_knot_complex(std::int64_t p, std::int64_t q) {
  return stairway(torus_knot_steps(p, q));
}

ModelComplex box_complex(std::int64_t n) {
  if (n <= 0) throw DomainError("box complex needs n >= 1");
  return ModelComplex::Builder()
      .generator("A", 0, {-n, n})
      .generator("B", 0, {0, 0})
      .generator("C", 0, {n, -n})
      .generator("X", 1, {n, n})
      .generator("u", -1, {-n, -n})
      .arrow("X", "A")
      .arrow("X", "C")
      .arrow("A", "u")
      .arrow("B", "u")
      .arrow("C", "u")
      .build();
}

ModelComplex figure6_complex() {
  return ModelComplex::Builder()
      .generator("a", 0, {-3, 1})
      .generator("b", 0, {0, -2})
      .generator("c", 0, {-2, 0})
      .generator("d", 0, {1, -3})
      .generator("e", 1, {1, 1})
      .generator("u1", -1, {-3, -2})
      .generator("u2", -1, {-2, -3})
      .arrow("e", "a")
      .arrow("e", "b")
      .arrow("e", "c")
      .arrow("e", "d")
      .arrow("a", "u1")
      .arrow("b", "u1")
      .arrow("c", "u2")
      .arrow("d", "u2")
      .build();
}

ModelComplex figure8_complex() {
  return add_acyclic_box(unknot(), {0, 0}, 1);
}

ModelComplex add_acyclic_box(const ModelComplex& c, LatticePoint corner, std::int64_t size,
                             std::int64_t grading) {
  if (size <= 0) throw DomainError("acyclic box needs a positive side length");
  const ModelComplex box = ModelComplex::Builder()
                               .generator("T", grading + 2, {corner.i + size, corner.j + size})
                               .generator("L", grading + 1, {corner.i, corner.j + size})
                               .generator("R", grading + 1, {corner.i + size, corner.j})
                               .generator("D", grading, corner)
                               .arrow("T", "L")
                               .arrow("T", "R")
                               .arrow("L", "D")
                               .arrow("R", "D")
                               .build();
  return direct_sum(c, box);
}

ModelComplex nk_complex(int n) {
  if (n < 1) throw DomainError("nK needs n >= 1");
  const auto count = static_cast<std::size_t>(n);
  return tensor(stairway(StepVector(2 * count, 2)), dual(stairway(StepVector(4 * count, 1))));
}

namespace {

const char* const kCatalogHelp =
    "unknot, T(3,4), T(2,5), T(4,5), T(5,7), fig8, hom-C1, hom-C2, hom-K, box(n), figure6, nK(n)";

}  // namespace

ModelComplex catalog(const std::string& name) {
  if (name == "unknot") return unknot();
  if (name == "fig8") return figure8_complex();
  if (name == "figure6") return figure6_complex();
  if (name == "hom-C1") return stairway({2, 2});
  if (name == "hom-C2") return stairway({1, 1, 1, 1});
  if (name == "hom-K") return tensor(stairway({2, 2}), dual(stairway({1, 1, 1, 1})));
  static const std::regex torus(R"(T\((\d+),(\d+)\))");
  static const std::regex indexed(R"((box|nK)\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, torus))
    return torus_knot_complex(std::stoll(m[1].str()), std::stoll(m[2].str()));
  if (std::regex_match(name, m, indexed)) {
    const long long n = std::stoll(m[2].str());
    if (m[1].str() == "box") return box_complex(n);
    return nk_complex(static_cast<int>(n));
  }
  throw DomainError("unknown catalog complex '" + name + "'; valid names: " + kCatalogHelp);
}

std::vector<std::string> catalog_names() {
  return {"unknot", "T(3,4)", "T(2,5)",  "T(4,5)", "T(5,7)", "fig8",   "hom-C1",  "hom-C2",
          "hom-K",  "box(1)", "box(2)", "box(3)", "figure6", "nK(1)", "nK(2)"};
}

}  // namespace kfloer
