#include <doctest.h>

#include <numeric>

#include "hallskew/errors.hpp"
#include "hallskew/numth.hpp"

using namespace hallskew;

namespace {

// Independent sieve for the family cross-check.
std::vector<std::uint64_t> sieve_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i > lo && i < hi) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

TEST_CASE("e values") {
  CHECK(e_value(GroupDescriptor::alt(7)) == 7);
  CHECK(e_value(GroupDescriptor::psl(3, 2)) == 7);
  CHECK(e_value(GroupDescriptor::m23()) == 23);
  CHECK(e_value(GroupDescriptor::psigma(2, 4)) == 17);
  CHECK_THROWS_AS(e_value(GroupDescriptor::cyclic(5)), InvalidArgument);
  for (auto desc : table1_catalog()) CHECK(simple_order(desc) % e_value(desc) == 0);
}

TEST_CASE("compatibility") {
  CHECK(hyp1_compatible({profile(GroupDescriptor::psl(2, 4)), profile(GroupDescriptor::psl(3, 2))}).ok);
  CHECK(hyp1_compatible({profile(GroupDescriptor::psl2_11()), profile(GroupDescriptor::alt(7))}).ok);
  auto bad = hyp1_compatible({profile(GroupDescriptor::psl(2, 4)), profile(GroupDescriptor::psl(2, 8))});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violation);
  CHECK(bad.violation->first != bad.violation->second);
}

TEST_CASE("gcd identity") {
  auto r = gcd_identity(3, 2);
  CHECK(r.ok);
  CHECK(r.e == 7);
  CHECK(r.gcds.size() == 2);
  CHECK(gcd_identity(3, 3).ok);
  for (auto [d, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{5, 2}, {7, 2}, {5, 3}, {3, 8}, {2, 4}}) {
    auto rep = gcd_identity(d, q);
    CHECK(rep.ok);
    CHECK(rep.congruence);
    CHECK(rep.stabilizer_gcd == 1);
    CHECK(gcd(psl_order(d, q) / rep.e, rep.e) == 1);
  }
  // 3 divides 4 - 1, and indeed 3 divides both e = 21 and q - 1
  CHECK_THROWS_AS(gcd_identity(3, 4), HypothesisViolation);
  CHECK_THROWS_AS(gcd_identity(2, 3), HypothesisViolation);
  CHECK_THROWS_AS(gcd_identity(4, 2), HypothesisViolation);
}

TEST_CASE("congruence e = d mod q-1") {
  for (std::uint32_t d : {2u, 3u, 5u, 7u})
    for (std::uint64_t q = 2; q < 40; ++q) {
      if (std::gcd(std::uint64_t{d}, q - 1) != 1 || prime_power(q).first == 0) continue;
      BigInt e = 0, qq = 1;
      for (std::uint32_t i = 0; i < d; ++i, qq *= q) e += qq;
      CHECK(e % (q - 1) == d % (q - 1));
      CHECK(gcd_identity(d, q).congruence);
    }
}

TEST_CASE("prime families") {
  auto r = prime_family(2, 3);
  CHECK(r.family == std::vector<std::uint64_t>{5, 7});
  CHECK(r.ok);
  CHECK(r.checks.size() == 4 + 5 + 7 + 6);
  auto s = prime_family(2, 5);
  CHECK(s.family.size() == 6);
  CHECK(s.family == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23});
  CHECK(s.ok);
  for (std::uint64_t d : {3u, 5u, 7u}) CHECK(prime_family(2, d).family == sieve_between(d, d * d));
  CHECK_THROWS_AS(prime_family(3, 2), InvalidArgument);
  CHECK_THROWS_AS(prime_family(2, 4), InvalidArgument);
  CHECK_THROWS_AS(prime_family(2, 17), BoundExceeded);
}

TEST_CASE("mod 6 condition and PSL(2,2^f) pairs") {
  CHECK(solvable_f_ok(2));
  CHECK(solvable_f_ok(4));
  CHECK_FALSE(solvable_f_ok(6));
  CHECK_FALSE(solvable_f_ok(3));
  CHECK(psl2_pair_infeasible(2, 4));
  CHECK(psl2_pair_infeasible(1, 2));
  for (std::uint64_t f = 2; f <= 10; ++f)
    for (std::uint64_t e = 1; e < f; ++e) CHECK(psl2_pair_infeasible(e, f));
  CHECK_THROWS_AS(psl2_pair_infeasible(3, 3), InvalidArgument);
}

TEST_CASE("compatible linear tuples") {
  auto pairs = compatible_linear_tuples(3, 8, 2);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& t : pairs) {
    std::vector<SimpleFactorProfile> ps;
    for (const auto& d : t) ps.push_back(profile(d));
    CHECK(hyp1_compatible(ps).ok);
  }
}
