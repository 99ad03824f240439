#include "kfloer/complex_io.hpp"
#include "kfloer/constructors.hpp"
#include "kfloer/errors.hpp"
#include "kfloer/expression.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

using namespace kfloer;

TEST_CASE("atoms") {
  CHECK(describe(parse_expression("T(3,4)")) == "T(3,4)");
  CHECK(describe(parse_expression(" stair[ 1 , 2 ] ")) == "stair[1,2]");
  CHECK(describe(parse_expression("hom-K")) == "hom-K");
  CHECK(describe(parse_expression("box(2)")) == "box(2)");
  CHECK(describe(parse_expression("@dir/file.txt")) == "@dir/file.txt");
}

TEST_CASE("precedence and associativity") {
  CHECK(describe(parse_expression("stair[2,2] # -stair[1,1,1,1]")) ==
        "tensor(stair[2,2], dual(stair[1,1,1,1]))");
  CHECK(describe(parse_expression("2 * (stair[2,2] # -stair[1,1,1,1])")) ==
        "power(2, tensor(stair[2,2], dual(stair[1,1,1,1])))");
  CHECK(describe(parse_expression("unknot # fig8 # figure6")) ==
        "tensor(tensor(unknot, fig8), figure6)");
  CHECK(describe(parse_expression("unknot + fig8 + figure6")) == "sum(sum(unknot, fig8), figure6)");
  CHECK(describe(parse_expression("unknot + fig8 # figure6")) ==
        "sum(unknot, tensor(fig8, figure6))");
  CHECK(describe(parse_expression("-T(2,3) # T(2,5)")) == "tensor(dual(T(2,3)), T(2,5))");
  CHECK(describe(parse_expression("-(2*T(2,3))")) == "dual(power(2, T(2,3)))");
  CHECK(describe(parse_expression("2*-T(2,3)")) == "power(2, dual(T(2,3)))");
  CHECK(describe(parse_expression("--T(2,3)")) == "dual(dual(T(2,3)))");
  CHECK(describe(parse_expression("2*3*unknot")) == "power(2, power(3, unknot))");
}

TEST_CASE("parse errors report offset and expected tokens") {
  const auto error_of = [](const char* text) -> ParseError {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return e;
    }
    FAIL("no error for " << text);
    return ParseError("", 0);
  };
  const auto has = [](const ParseError& e, const std::string& tok) {
    return std::find(e.expected().begin(), e.expected().end(), tok) != e.expected().end();
  };

  ParseError e = error_of("T(3,4");
  CHECK(e.position() == 5);
  CHECK(has(e, "')'"));

  e = error_of("T(3,4) # foo");
  CHECK(e.position() == 9);
  CHECK(has(e, "hom-K"));

  e = error_of("(unknot # fig8");
  CHECK(e.position() == 14);
  CHECK(has(e, "')'"));

  e = error_of("unknot)");
  CHECK(e.position() == 6);
  CHECK(has(e, "end of input"));

  e = error_of("0 * unknot");
  CHECK(e.position() == 0);
  CHECK(has(e, "positive integer"));

  e = error_of("stair[1,2");
  CHECK(has(e, "']'"));

  e = error_of("");
  CHECK(e.position() == 0);
  CHECK(has(e, "complex name"));

  e = error_of("unknot #");
  CHECK(e.position() == 8);

  e = error_of("99999999999999999999 * unknot");
  CHECK(has(e, "integer"));
}

TEST_CASE("evaluation") {
  CHECK(complex_from_expression("T(3,4)") == torus_knot_complex(3, 4));
  CHECK(complex_from_expression("--T(3,4)") == torus_knot_complex(3, 4));
  CHECK(complex_from_expression("-T(3,4)") == dual(torus_knot_complex(3, 4)));
  CHECK(complex_from_expression("stair[2,2] # -stair[1,1,1,1]") == catalog("hom-K"));
  CHECK(complex_from_expression("2*unknot").size() == 1);
  CHECK(complex_from_expression("box(1) + box(2)").size() == 10);
  CHECK_THROWS_AS(complex_from_expression("T(2,4)"), DomainError);
  CHECK_THROWS_AS(complex_from_expression("box(0)"), DomainError);
}

TEST_CASE("file references resolve against a base directory") {
  const auto dir = std::filesystem::temp_directory_path() / "kfloer_expr_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "t34.txt");
    f << format_complex(torus_knot_complex(3, 4));
  }
  CHECK(complex_from_expression("@t34.txt", dir) == torus_knot_complex(3, 4));
  CHECK(complex_from_expression("-@t34.txt # T(2,3)", dir).size() == 15);
  CHECK_THROWS_AS(complex_from_expression("@missing.txt", dir), ParseError);
  std::filesystem::remove_all(dir);
}
