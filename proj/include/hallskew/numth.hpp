#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hallskew/bigint.hpp"
#include "hallskew/zoo.hpp"

namespace hallskew {

struct SimpleFactorProfile {
  GroupDescriptor desc;
  BigInt order;  // |T| for the nonabelian simple group T behind desc
  BigInt e;      // e(T), the order of the cyclic factor
};

// e(T): p for alt/sym, (q^d-1)/(q-1) for psl and psigma, 11 for psl2_11 and m11, 23 for m23.
BigInt e_value(const GroupDescriptor& desc);
// Closed-formula order of the simple group behind desc (the socle for sym and psigma).
BigInt simple_order(const GroupDescriptor& desc);
SimpleFactorProfile profile(const GroupDescriptor& desc);

struct Compatibility {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first (i, j) with gcd(|T_i|, e_j) > 1
};
// gcd(|T_i|, e(T_j)) = 1 for all i != j.
Compatibility hyp1_compatible(const std::vector<SimpleFactorProfile>& profiles);

struct GcdIdentityReport {
  bool ok = true;
  BigInt e;                                          // (q^d-1)/(q-1)
  std::vector<std::pair<std::uint32_t, BigInt>> gcds;  // (j, gcd(e, q^j - 1)) for 1 <= j < d
  bool congruence = true;                            // e = d (mod q-1)
  BigInt stabilizer_gcd;                             // gcd(|PSL(d,q)| / e, e), i.e. gcd(|H|, |K|)
};
// Requires d prime and gcd(d, q-1) = 1; throws HypothesisViolation otherwise.
GcdIdentityReport gcd_identity(std::uint32_t d, std::uint64_t q);

struct FamilyCheck {
  std::uint64_t i, j;  // the primes d_i, d_j
  std::uint32_t k;
  bool ok;
};
struct PrimeFamilyReport {
  std::vector<std::uint64_t> family;                  // primes strictly between d and d^2
  std::vector<FamilyCheck> checks;                    // gcd(e_i, q_j^k - 1) = 1
  std::vector<std::pair<std::uint64_t, bool>> coprime;  // gcd(d_i, q_i - 1) = 1
  bool ok = true;
};
inline constexpr std::uint64_t kDefaultFamilyCutoff = 13;
// Primes p < d; q_i = p^(d_i). For i != j every 1 <= k <= d_j is checked; for
// i = j, 1 <= k < d_i. Throws InvalidArgument on bad input or d > cutoff.
PrimeFamilyReport prime_family(std::uint64_t p, std::uint64_t d, std::uint64_t cutoff = kDefaultFamilyCutoff);

// f = 2, 4 (mod 6)
bool solvable_f_ok(std::uint64_t f);

// Whether gcd(2^e+1, 2^f+1) = gcd(2^e-1, 2^f+1) = gcd(2^e+1, 2^f-1) = 1 fails. Requires 1 <= e < f.
bool psl2_pair_infeasible(std::uint64_t e, std::uint64_t f);

// Search harness for r-tuples of PSL(d,q) (d prime, gcd(d,q-1) = 1, d <= max_d,
// q <= max_q) that are pairwise compatible. Tuples are ascending in |T| and at
// most `limit` are returned.
std::vector<std::vector<GroupDescriptor>> compatible_linear_tuples(std::uint32_t max_d, std::uint64_t max_q,
                                                                   std::size_t r, std::size_t limit = 100);

}  // namespace hallskew
