#include <doctest.h>

#include <set>

#include "hallskew/errors.hpp"
#include "hallskew/skew.hpp"
#include "hallskew/zoo.hpp"
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

// The library's tables agree with the oracle's maps element by element.
void check_against_oracle(const hallskew::SkewMorphism& s, const oracle::Skew& o) {
  REQUIRE(o.rho.size() == s.size());
  CHECK(s.order() == o.order);
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const Permutation x = s.element(i);
    CHECK(s.element(s.rho()[i]) == o.rho.at(x));
    CHECK(s.pi()[i] == o.pi.at(x));
  }
}

struct Wreath {
  PermGroup G, H;
  Permutation k;
};

// Z5 wr S2 = D10 <a>, D10 = <a b^-1, t>
Wreath wreath5() {
  auto a = p("(1,2,3,4,5)", 10);
  auto b = p("(6,7,8,9,10)", 10);
  auto t = p("(1,6)(2,7)(3,8)(4,9)(5,10)", 10);
  return {PermGroup(10, {a, b, t}), PermGroup(10, {a * b.inverse(), t}), a};
}

}  // namespace

TEST_CASE("D8 in S4 with a 3-cycle gives a proper skew-morphism of order 3") {
  auto s4 = gen({"(1,2)", "(1,2,3,4)"}, 4);
  auto d8 = gen({"(1,2,3,4)", "(1,3)"}, 4);
  auto k = p("(1,2,3)", 4);
  auto f = hallskew::certify_factorization(s4, d8, k);
  auto result = hallskew::skew_from_factorization(f);
  const auto& s = result.skew;
  CHECK(result.faithful);
  CHECK(s.order() == 3);
  CHECK_FALSE(s.trivial());
  CHECK(hallskew::is_hall_skew(s));
  auto elems = oracle::closure(d8.generators(), 4);
  check_against_oracle(s, oracle::skew_from(elems, k));
  auto check = hallskew::verify_axioms(s);
  CHECK(check.ok);
  CHECK(check.exhaustive);
  CHECK(s.rho()[0] == 0);
  CHECK(s.element(0).is_identity());
}

TEST_CASE("S4 in S5 with a 5-cycle gives a Hall skew-morphism of order 5") {
  auto s5 = gen({"(1,2)", "(1,2,3,4,5)"}, 5);
  auto s4 = s5.stabilizer(0);
  auto k = p("(1,2,3,4,5)", 5);
  auto f = hallskew::certify_factorization(s5, s4, k);
  auto s = hallskew::skew_from_factorization(f).skew;
  CHECK(s.order() == 5);
  CHECK(hallskew::is_hall_skew(s));
  CHECK_FALSE(s.trivial());
  check_against_oracle(s, oracle::skew_from(oracle::closure(s4.generators(), 5), k));
  CHECK(hallskew::verify_axioms(s).ok);
}

TEST_CASE("wreath product skew-morphism is an automorphism of order 5") {
  auto w = wreath5();
  auto f = hallskew::certify_factorization(w.G, w.H, w.k);
  CHECK_FALSE(f.is_hall());
  auto s = hallskew::skew_from_factorization(f).skew;
  CHECK(s.order() == 5);
  CHECK(s.trivial());
  CHECK(hallskew::is_automorphism(s));
  CHECK_FALSE(hallskew::is_hall_skew(s));
  check_against_oracle(s, oracle::skew_from(oracle::closure(w.H.generators(), 10), w.k));
}

TEST_CASE("non-core-free cyclic factor is refused") {
  auto s3 = gen({"(1,2)", "(1,2,3)"}, 3);
  auto f = hallskew::certify_factorization(s3, gen({"(1,2)"}, 3), p("(1,2,3)", 3));
  CHECK_FALSE(f.k_core_free());
  CHECK_THROWS_AS(hallskew::skew_from_factorization(f), hallskew::InvalidArgument);
}

TEST_CASE("element bound is enforced") {
  auto s5 = gen({"(1,2)", "(1,2,3,4,5)"}, 5);
  auto f = hallskew::certify_factorization(s5, s5.stabilizer(0), p("(1,2,3,4,5)", 5));
  CHECK_THROWS_AS(hallskew::skew_from_factorization(f, 10), hallskew::BoundExceeded);
}

TEST_CASE("a corrupted rho image is caught with a genuine witness") {
  auto s4 = gen({"(1,2)", "(1,2,3,4)"}, 4);
  auto d8 = gen({"(1,2,3,4)", "(1,3)"}, 4);
  auto s = hallskew::skew_from_factorization(hallskew::certify_factorization(s4, d8, p("(1,2,3)", 4))).skew;
  for (std::uint32_t i = 1; i < s.size(); ++i)
    for (std::uint32_t j = i + 1; j < s.size(); ++j) {
      auto rho = s.rho();
      std::swap(rho[i], rho[j]);
      hallskew::SkewMorphism bad(s.base(), rho, s.pi());
      auto exhaustive = hallskew::verify_axioms(bad);
      auto reduced = hallskew::verify_axioms(bad, 0);
      CHECK_FALSE(exhaustive.ok);
      CHECK(exhaustive.ok == reduced.ok);
      REQUIRE(exhaustive.witness);
      auto [g, h] = *exhaustive.witness;
      auto lhs = bad.element(bad.rho()[bad.index_of(bad.element(g) * bad.element(h))]);
      auto rhs = bad.element(bad.rho()[g]) *
                 bad.element(bad.rho_power(static_cast<std::uint32_t>(h), bad.pi()[g]));
      CHECK(lhs != rhs);
    }
}

TEST_CASE("reduced verification agrees with the exhaustive one") {
  auto s5 = gen({"(1,2)", "(1,2,3,4,5)"}, 5);
  auto f = hallskew::certify_factorization(s5, s5.stabilizer(0), p("(1,2,3,4,5)", 5));
  auto s = hallskew::skew_from_factorization(f).skew;
  CHECK(hallskew::verify_axioms(s, 0).ok);
  CHECK_FALSE(hallskew::verify_axioms(s, 0).exhaustive);
  int disagreements = 0;
  for (std::uint32_t i = 1; i < s.size(); i += 3) {
    for (std::uint32_t j = i + 1; j < s.size(); j += 5) {
      auto rho = s.rho();
      std::swap(rho[i], rho[j]);
      hallskew::SkewMorphism bad(s.base(), rho, s.pi());
      if (hallskew::verify_axioms(bad).ok != hallskew::verify_axioms(bad, 0).ok) ++disagreements;
    }
    // a wrong power alone
    auto pi = s.pi();
    pi[i] = (pi[i] + 1) % s.order();
    hallskew::SkewMorphism bad(s.base(), s.rho(), pi);
    CHECK_FALSE(hallskew::verify_axioms(bad, 0).ok);
  }
  CHECK(disagreements == 0);
}

TEST_CASE("brute-force enumeration matches the oracle on small groups") {
  for (auto group : {gen({"(1,2,3,4)", "(1,3)"}, 4), gen({"(1,2,3,4,5,6)"}, 6), gen({"(1,2)(3,4)", "(1,3)(2,4)"}, 4),
                     gen({"(1,2,3)", "(1,2)"}, 3), gen({"(1,2,3,4,5)"}, 5)}) {
    auto found = hallskew::brute_enumerate(group);
    auto elems = oracle::closure(group.generators(), group.degree());
    auto expected = oracle::all_skews(elems);
    CHECK(found.size() == expected.size());
    std::set<std::map<Permutation, Permutation>> lib, ref;
    for (const auto& s : found) {
      std::map<Permutation, Permutation> m;
      for (std::uint64_t i = 0; i < s.size(); ++i) m[s.element(i)] = s.element(s.rho()[i]);
      lib.insert(m);
      CHECK(hallskew::verify_axioms(s).ok);
    }
    for (const auto& s : expected) ref.insert(s.rho);
    CHECK(lib == ref);
  }
}

TEST_CASE("brute-force enumeration of D8 contains the S4-derived skew-morphism") {
  auto s4 = gen({"(1,2)", "(1,2,3,4)"}, 4);
  auto d8 = gen({"(1,2,3,4)", "(1,3)"}, 4);
  auto derived = hallskew::skew_from_factorization(hallskew::certify_factorization(s4, d8, p("(1,2,3)", 4))).skew;
  auto all = hallskew::brute_enumerate(d8);
  bool present = false;
  for (const auto& s : all) present = present || (s.rho() == derived.rho() && s.pi() == derived.pi());
  CHECK(present);
  // the 8 automorphisms are among them
  CHECK(std::count_if(all.begin(), all.end(), [](const auto& s) { return s.trivial(); }) == 8);
  CHECK_THROWS_AS(hallskew::brute_enumerate(s4), hallskew::BoundExceeded);
}

TEST_CASE("Table 1 rows yield Hall skew-morphisms of order e(T)") {
  for (const auto& desc : hallskew::table1_catalog()) {
    auto t = hallskew::table1_triple(desc);
    if (t.H.order() > 50000) continue;
    CAPTURE(desc.to_string());
    auto f = hallskew::certify_factorization(t.G, t.H, t.k);
    auto result = hallskew::skew_from_factorization(f);
    CHECK(result.faithful);
    CHECK(hallskew::BigInt(result.skew.order()) == hallskew::e_value(desc));
    CHECK(hallskew::is_hall_skew(result.skew));
    CHECK(hallskew::verify_axioms(result.skew).ok);
  }
}

TEST_CASE("shape (1): S4 over D8 and the wreath product") {
  auto s4 = gen({"(1,2)", "(1,2,3,4)"}, 4);
  auto d8 = gen({"(1,2,3,4)", "(1,3)"}, 4);
  auto r = hallskew::shape_check(hallskew::certify_factorization(s4, d8, p("(1,2,3)", 4)));
  CHECK(r.shape == 1);
  CHECK(r.n_order == 4);
  CHECK(r.quotient_order == 6);
  CHECK(r.k_bar_normal);
  CHECK(r.complement_order == 2);
  CHECK(r.hall);

  auto w = wreath5();
  auto rw = hallskew::shape_check(hallskew::certify_factorization(w.G, w.H, w.k));
  CHECK(rw.shape == 1);
  CHECK(rw.n_order == 10);
  CHECK(rw.quotient_order == 5);
  CHECK_FALSE(rw.hall);
}

TEST_CASE("shape (2): almost simple quotients") {
  auto t = hallskew::table1_triple(hallskew::GroupDescriptor::psl2_11());
  auto r = hallskew::shape_check(hallskew::certify_factorization(t.G, t.H, t.k));
  CHECK(r.shape == 2);
  CHECK(r.n_order == 1);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].order == 660);
  CHECK(r.factors[0].simple);
  REQUIRE(r.factors[0].profile);
  CHECK(*r.factors[0].profile == hallskew::GroupDescriptor::psl2_11());

  auto s5 = hallskew::table1_triple(hallskew::GroupDescriptor::sym(5));
  auto r5 = hallskew::shape_check(hallskew::certify_factorization(s5.G, s5.H, s5.k));
  CHECK(r5.shape == 2);
  REQUIRE(r5.factors.size() == 1);
  CHECK(r5.factors[0].order == 60);
}

TEST_CASE("shape (2) with two compatible simple factors") {
  // PSL(2,4) x PSL(3,2): gcd(60, 7) = gcd(168, 5) = 1
  auto a = hallskew::assemble({hallskew::GroupDescriptor::psl(2, 4), hallskew::GroupDescriptor::psl(3, 2)}, 0, {});
  auto t0 = hallskew::table1_triple(a.factors[0]);
  auto t1 = hallskew::table1_triple(a.factors[1]);
  std::vector<Permutation> hgens;
  for (const auto& g : t0.H.generators()) hgens.push_back(a.embed(0, g));
  for (const auto& g : t1.H.generators()) hgens.push_back(a.embed(1, g));
  PermGroup h(a.group.degree(), hgens);
  auto k = a.embed(0, t0.k) * a.embed(1, t1.k);
  auto f = hallskew::certify_factorization(a.group, h, k);
  auto r = hallskew::shape_check(f);
  CHECK(r.shape == 2);
  CHECK(r.factors.size() == 2);
  CHECK(r.compatible);
  auto s = hallskew::skew_from_factorization(f).skew;
  CHECK(s.order() == 35);
  CHECK(hallskew::verify_axioms(s).ok);
}
