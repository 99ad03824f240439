#include "kfloer/complex.hpp"
#include "kfloer/constructors.hpp"
#include "kfloer/errors.hpp"
#include "kfloer/validate.hpp"

#include <doctest.h>

using namespace kfloer;

TEST_CASE("builder rejects structural errors") {
  CHECK_THROWS_AS(ModelComplex::Builder().generator("a", 0, {0, 0}).generator("a", 1, {1, 1}).build(),
                  InvalidComplexError);
  CHECK_THROWS_AS(ModelComplex::Builder().generator("a", 0, {0, 0}).arrow("a", "b").build(),
                  InvalidComplexError);
  CHECK_THROWS_AS(ModelComplex::Builder()
                      .generator("a", 1, {0, 0})
                      .generator("b", 0, {0, 0})
                      .arrow("a", "b", -1)
                      .build(),
                  InvalidComplexError);
}

TEST_CASE("repeated arrows cancel mod 2") {
  const ModelComplex c = ModelComplex::Builder()
                             .generator("x", 1, {1, 1})
                             .generator("y", 0, {0, 1})
                             .arrow("x", "y")
                             .arrow("x", "y")
                             .build();
  CHECK(c.boundary(0).empty());
}

TEST_CASE("grading slices translate by U") {
  const ModelComplex c = stairway({1, 2});
  // a1(0,2) a2(1,0) in grading 0, b1(1,2) in grading 1.
  const GradedSlice s0 = grading_slice(c, 0);
  const GradedSlice s1 = grading_slice(c, 1);
  const GradedSlice s2 = grading_slice(c, 2);
  CHECK(s0.size() == 2);
  CHECK(s1.size() == 1);
  REQUIRE(s2.size() == 2);
  // Grading 2 holds U^-1 a1 at (1,3).
  CHECK(s2.elements[0].u_power == -1);
  CHECK(s2.elements[0].point == LatticePoint{1, 3});
  CHECK(grading_slice(c, -1).elements[0].point == LatticePoint{0, 1});
}

TEST_CASE("boundary squares to zero on every slice of valid complexes") {
  for (const auto& name : catalog_names()) {
    const ModelComplex c = catalog(name);
    for (std::int64_t g = -2; g <= 3; ++g) {
      const F2Matrix d1 = slice_boundary(c, g);
      const F2Matrix d0 = slice_boundary(c, g - 1);
      CHECK_MESSAGE((d0 * d1).is_zero(), name << " at grading " << g);
    }
  }
}

TEST_CASE("slice dimensions are periodic with period 2") {
  const ModelComplex c = catalog("hom-K");
  for (std::int64_t g = -3; g <= 3; ++g) {
    CHECK(grading_slice(c, g).size() == grading_slice(c, g + 2).size());
    CHECK(homology_dimension(c, g) == homology_dimension(c, g + 2));
  }
}

TEST_CASE("dual is an involution and negates points") {
  for (const auto& name : catalog_names()) {
    const ModelComplex c = catalog(name);
    const ModelComplex d = dual(c);
    CHECK(dual(d) == c);
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(d.generator(k).point == LatticePoint{-c.generator(k).point.i, -c.generator(k).point.j});
      CHECK(d.generator(k).grading == -c.generator(k).grading);
    }
  }
}

TEST_CASE("tensor product: sizes, homology, associativity up to renaming") {
  const ModelComplex a = stairway({1, 1}), b = box_complex(1), c = dual(stairway({2, 2}));
  const ModelComplex ab = tensor(a, b);
  CHECK(ab.size() == a.size() * b.size());
  CHECK(validate(ab).ok());
  const ModelComplex left = tensor(tensor(a, b), c);
  const ModelComplex right = tensor(a, tensor(b, c));
  REQUIRE(left.size() == right.size());
  for (std::size_t k = 0; k < left.size(); ++k) {
    CHECK(left.generator(k).grading == right.generator(k).grading);
    CHECK(left.generator(k).point == right.generator(k).point);
    CHECK(left.boundary(k) == right.boundary(k));
  }
  CHECK(tensor_power(a, 3).size() == 27);
  CHECK_THROWS_AS(tensor_power(a, 0), DomainError);
}

TEST_CASE("direct sum renames clashes and keeps both summands") {
  const ModelComplex s = direct_sum(unknot(), unknot());
  REQUIRE(s.size() == 2);
  CHECK(s.generator(0).name != s.generator(1).name);
  CHECK(homology_dimension(s, 0) == 2);
  CHECK(direct_sum(empty_complex(), unknot()) == unknot());
}

TEST_CASE("generator coset of the unknot and of a staircase") {
  const CycleCoset u = generator_coset(unknot());
  CHECK(u.z0.popcount() == 1);
  CHECK(u.boundaries.empty());
  const CycleCoset s = generator_coset(stairway({1, 1}));
  CHECK(s.boundaries.size() == 1);
  CHECK_THROWS_AS(generator_coset(direct_sum(unknot(), unknot())), InvalidComplexError);
}

TEST_CASE("validate names the failing axiom") {
  const ModelComplex bad_dd = ModelComplex::Builder()
                                  .generator("x", 1, {1, 1})
                                  .generator("y", 0, {0, 1})
                                  .generator("w", -1, {0, 0})
                                  .arrow("x", "y")
                                  .arrow("y", "w")
                                  .build();
  const ValidationReport r = validate(bad_dd);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name == "d-squared");
  CHECK(r.first_failure()->witness.find("x") != std::string::npos);
  CHECK_THROWS_AS(require_kcomplex(bad_dd), InvalidComplexError);

  const ModelComplex bad_filtration = ModelComplex::Builder()
                                          .generator("x", 1, {0, 0})
                                          .generator("y", 0, {1, 0})
                                          .arrow("x", "y")
                                          .build();
  CHECK(validate(bad_filtration).first_failure()->name == "filtration");

  const ModelComplex bad_grading = ModelComplex::Builder()
                                       .generator("x", 0, {1, 1})
                                       .generator("y", 0, {0, 0})
                                       .arrow("x", "y")
                                       .build();
  CHECK(validate(bad_grading).first_failure()->name == "grading-drop");

  const ModelComplex shifted = ModelComplex::Builder().generator("a", 0, {1, 1}).build();
  CHECK(validate(shifted).first_failure()->name == "normalization");
}

TEST_CASE("acyclic complexes are recognized") {
  const ModelComplex box = add_acyclic_box(empty_complex(), {0, 0}, 2);
  const ValidationReport r = validate(box);
  CHECK(r.role == ComplexRole::Acyclic);
  CHECK_FALSE(r.ok());
  const ValidationReport fig8 = validate(figure8_complex());
  CHECK(fig8.ok());
  CHECK(fig8.components.size() == 2);
}

TEST_CASE("whole catalog validates") {
  for (const auto& name : catalog_names()) CHECK_MESSAGE(validate(catalog(name)).ok(), name);
}
