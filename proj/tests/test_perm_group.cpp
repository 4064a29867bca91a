#include <doctest.h>

#include "hallskew/errors.hpp"
#include "hallskew/perm_group.hpp"
#include "oracle.hpp"

using hallskew::PermGroup;
using hallskew::Permutation;
using oracle::p;

namespace {

PermGroup gen(std::initializer_list<const char*> cycles, std::size_t degree) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(p(c, degree));
  return PermGroup(degree, gens);
}

}  // namespace

TEST_CASE("orders of small groups") {
  CHECK(gen({"(1,2)", "(1,2,3,4,5)"}, 5).order() == 120);
  CHECK(gen({"(1,2,3)", "(1,2,3,4,5)"}, 5).order() == 60);
  CHECK(gen({"(1,2,3,4)", "(1,3)"}, 4).order() == 8);
  CHECK(gen({"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}, 11).order() == 7920);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK_THROWS_AS(hallskew::group_from_generators({}), hallskew::InvalidArgument);
}

TEST_CASE("membership") {
  auto s5 = gen({"(1,2)", "(1,2,3,4,5)"}, 5);
  auto a5 = gen({"(1,2,3)", "(1,2,3,4,5)"}, 5);
  CHECK(s5.contains(p("(1,2)", 5)));
  CHECK_FALSE(a5.contains(p("(1,2)", 5)));
  CHECK(a5.contains(p("(1,2)(3,4)", 5)));
  CHECK_THROWS_AS(a5.contains(Permutation(4)), hallskew::InvalidArgument);
  CHECK(a5.is_subgroup_of(s5));
  CHECK(a5.is_normal_in(s5));
}

TEST_CASE("chain order agrees with brute-force closure") {
  const std::vector<std::pair<std::vector<const char*>, std::size_t>> cases = {
      {{"(1,2,3,4)", "(1,3)"}, 4},
      {{"(1,2,3)(4,5,6)", "(1,4)(2,5)(3,6)", "(1,2)(4,5)"}, 6},
      {{"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}, 7},
      {{"(1,2)(3,4)", "(1,3)(2,4)", "(5,6,7)"}, 7},
      {{"(1,2,3,4,5,6)", "(1,2)"}, 6},
      {{"(1,5,2,6)(3,7)(4,8)", "(1,3)(2,4)"}, 8},
  };
  for (const auto& [cycles, degree] : cases) {
    std::vector<Permutation> gens;
    for (auto c : cycles) gens.push_back(p(c, degree));
    PermGroup g(degree, gens);
    auto brute = oracle::closure(gens, degree);
    CHECK(g.order() == brute.size());
    auto elems = g.elements();
    std::set<Permutation> listed(elems.begin(), elems.end());
    CHECK(listed == brute);
    for (std::uint64_t r = 0; r < elems.size(); ++r) {
      CHECK(g.rank(elems[r]) == r);
      CHECK(g.unrank(r) == elems[r]);
    }
  }
}

TEST_CASE("base prefix and stabilizers") {
  auto s5 = gen({"(1,2)", "(1,2,3,4,5)"}, 5);
  std::vector<hallskew::Point> prefix{4, 3};
  auto rebased = s5.with_base_prefix(prefix);
  CHECK(rebased.base().front() == 4);
  CHECK(rebased.order() == 120);
  CHECK(s5.stabilizer(0).order() == 24);
  CHECK(s5.pointwise_stabilizer(prefix).order() == 6);
  CHECK(s5.stabilizer(2).contains(p("(1,2)", 5)));
  CHECK_FALSE(s5.stabilizer(2).contains(p("(1,3)", 5)));
}

TEST_CASE("closures and counting") {
  auto s4 = gen({"(1,2)", "(1,2,3,4)"}, 4);
  auto a4 = hallskew::derived_subgroup(s4);
  CHECK(a4.order() == 12);
  CHECK(hallskew::derived_subgroup(a4).order() == 4);
  auto d8 = gen({"(1,2,3,4)", "(1,3)"}, 4);
  CHECK(hallskew::intersection_order(a4, d8) == 4);
  CHECK(hallskew::normal_closure(s4, {p("(1,2)(3,4)", 4)}).order() == 4);
  CHECK(hallskew::count_involutions(s4) == 9);
  CHECK(hallskew::is_hall_subgroup(s4, d8));
  CHECK_FALSE(hallskew::is_hall_subgroup(a4, gen({"(1,2)(3,4)"}, 4)));
  CHECK_THROWS_AS(hallskew::is_hall_subgroup(a4, gen({"(1,2)"}, 4)), hallskew::InvalidArgument);
}
