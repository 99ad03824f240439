// Engine versus exhaustive enumeration on every complex small enough to
// enumerate.

#include "kfloer/constructors.hpp"
#include "kfloer/expression.hpp"
#include "kfloer/upsilon2.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

using namespace kfloer;

namespace {

const std::vector<std::string> kExtra = {"-T(3,4)", "-figure6", "T(2,3) # T(2,3)",
                                         "T(3,4) # -T(2,5)", "-box(2)", "fig8 # T(2,3)"};

std::vector<std::string> expressions() {
  auto out = catalog_names();
  out.insert(out.end(), kExtra.begin(), kExtra.end());
  return out;
}

}  // namespace

TEST_CASE("gamma(t) matches enumeration of the whole generator class") {
  int compared = 0;
  for (const auto& e : expressions()) {
    const ModelComplex c = complex_from_expression(e);
    const auto model = oracle::build(c);
    if (!model) continue;
    ++compared;
    const PreparedComplex p(c);
    for (Rational t = 0; t <= 2; t += Rational(1, 15))
      CHECK_MESSAGE(gamma_at(p, t) == oracle::gamma(*model, t), e << " at t=" << t);
    for (const auto& t : p.breakpoint_candidates())
      CHECK_MESSAGE(gamma_at(p, t) == oracle::gamma(*model, t), e << " at t=" << t);
  }
  CHECK(compared >= 12);
}

TEST_CASE("gamma^2_t(s) matches enumeration of all connecting chains") {
  int compared = 0;
  for (const auto& e : expressions()) {
    const ModelComplex c = complex_from_expression(e);
    const auto model = oracle::build(c);
    if (!model) continue;
    const PreparedComplex p(c);
    std::vector<Rational> ts{Rational(1), Rational(1, 2)};
    for (const auto& t : p.breakpoint_candidates())
      if (t > 0 && t < 2) ts.push_back(t);
    for (const auto& t : ts) {
      ++compared;
      for (Rational s = 0; s <= 2; s += Rational(1, 6)) {
        const ExtendedRational engine = gamma2_at(p, t, s);
        const auto expected = oracle::gamma2(*model, t, s);
        const ExtendedRational want = expected ? ExtendedRational(*expected) : ExtendedRational::neg_inf();
        CHECK_MESSAGE(engine == want, e << " t=" << t << " s=" << s);
      }
    }
  }
  CHECK(compared >= 20);
}
