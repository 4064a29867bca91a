#include <doctest.h>

#include "hallskew/errors.hpp"
#include "hallskew/permutation.hpp"

using hallskew::Permutation;

TEST_CASE("composition is left to right") {
  auto z = Permutation::parse("(1,2)(3,4)", 5);
  auto zr = Permutation::parse("(2,3)(4,5)", 5);
  CHECK((z * zr).to_string() == "(1,3,5,4,2)");
  CHECK(z * zr == Permutation::parse("(13542)", 5));
}

TEST_CASE("rotation times involution for p = 7") {
  auto rho = Permutation::parse("(1,2,3,4,5,6,7)");
  auto z = Permutation::parse("(1,2)(3,4)", 7);
  auto rz = rho * z;
  CHECK(rz[0] == 0);
  CHECK(rz[2] == 2);
  CHECK(rz[1] == 3);
  CHECK(rz.order() == 5);
  CHECK(conjugate(z, rho) == Permutation::parse("(2,3)(4,5)", 7));
}

TEST_CASE("identity and orders") {
  auto p = Permutation::parse("(1,2,3,4,5)");
  CHECK(Permutation(5) * p == p);
  CHECK(p.order() == 5);
  CHECK(Permutation(5).order() == 1);
  CHECK(Permutation::parse("(1,2)(3,4,5)").order() == 6);
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(7) == p * p);
  CHECK(p.is_even());
  CHECK_FALSE(Permutation::parse("(1,2)", 3).is_even());
}

TEST_CASE("parsing") {
  CHECK(Permutation::parse("(1 2)(3 4)", 4) == Permutation::parse("(1,2)(3,4)"));
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("(10,11)").degree() == 11);
  CHECK_THROWS_AS(Permutation::parse("(0,1)"), hallskew::InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)"), hallskew::InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1,2", 3), hallskew::InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1,5)", 4), hallskew::InvalidArgument);
  CHECK_THROWS_AS(Permutation(std::vector<hallskew::Point>{0, 0}), hallskew::InvalidArgument);
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(Permutation(3) * Permutation(4), hallskew::InvalidArgument);
}

TEST_CASE("embedding and restriction") {
  auto p = Permutation::parse("(1,2,3)");
  auto e = p.embedded(7, 4);
  CHECK(e.to_string() == "(5,6,7)");
  CHECK(e.restricted(4, 3) == p);
  CHECK_THROWS_AS(Permutation::parse("(1,5)", 6).restricted(0, 3), hallskew::InvalidArgument);
}
