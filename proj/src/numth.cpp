#include "hallskew/numth.hpp"

#include <algorithm>
#include <numeric>

#include "hallskew/errors.hpp"

namespace hallskew {

namespace {

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt projective_points(std::uint32_t d, const BigInt& q) { return (pow(q, d) - 1) / (q - 1); }

void require_prime_degree(const GroupDescriptor& desc) {
  if (!is_prime(desc.a) || desc.a < 5)
    throw InvalidArgument(desc.to_string() + " is not in Table 1 (needs a prime p >= 5)");
}

}  // namespace

BigInt e_value(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::Alt:
    case Kind::Sym:
      require_prime_degree(desc);
      return desc.a;
    case Kind::PSL:
      check_linear_hypothesis(desc.a, desc.b);
      return projective_points(desc.a, desc.b);
    case Kind::PSLSigma: {
      std::uint64_t q = std::uint64_t{desc.b} * desc.b;
      check_linear_hypothesis(desc.a, q);
      return projective_points(desc.a, q);
    }
    case Kind::PSL2_11:
    case Kind::M11: return 11;
    case Kind::M23: return 23;
    default: throw InvalidArgument(desc.to_string() + " is not in Table 1");
  }
}

BigInt simple_order(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::Alt:
    case Kind::Sym:
      require_prime_degree(desc);
      return factorial(desc.a) / 2;
    case Kind::PSL:
      check_linear_hypothesis(desc.a, desc.b);
      return psl_order(desc.a, desc.b);
    case Kind::PSLSigma: {
      std::uint64_t q = std::uint64_t{desc.b} * desc.b;
      check_linear_hypothesis(desc.a, q);
      return psl_order(desc.a, q);
    }
    case Kind::PSL2_11: return 660;
    case Kind::M11: return 7920;
    case Kind::M23: return 10200960;
    default: throw InvalidArgument(desc.to_string() + " is not in Table 1");
  }
}

SimpleFactorProfile profile(const GroupDescriptor& desc) { return {desc, simple_order(desc), e_value(desc)}; }

Compatibility hyp1_compatible(const std::vector<SimpleFactorProfile>& profiles) {
  Compatibility out;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      if (i == j) continue;
      if (gcd(profiles[i].order, profiles[j].e) != 1) {
        out.ok = false;
        out.violation = std::pair{i, j};
        return out;
      }
    }
  return out;
}

GcdIdentityReport gcd_identity(std::uint32_t d, std::uint64_t q) {
  if (!is_prime(d)) throw HypothesisViolation("dimension " + std::to_string(d) + " is not prime");
  if (q < 2) throw InvalidArgument("q must be at least 2");
  if (std::gcd(std::uint64_t{d}, q - 1) != 1)
    throw HypothesisViolation("gcd(" + std::to_string(d) + ", " + std::to_string(q - 1) + ") != 1");
  GcdIdentityReport r;
  const BigInt bq = q;
  r.e = projective_points(d, bq);
  for (std::uint32_t j = 1; j < d; ++j) {
    BigInt g = gcd(r.e, pow(bq, j) - 1);
    r.ok = r.ok && g == 1;
    r.gcds.emplace_back(j, g);
  }
  r.congruence = r.e % (bq - 1) == BigInt(d) % (bq - 1);
  BigInt order = pow(bq, d * (d - 1) / 2);
  for (std::uint32_t j = 2; j <= d; ++j) order *= pow(bq, j) - 1;
  order /= std::gcd(std::uint64_t{d}, q - 1);
  r.stabilizer_gcd = gcd(order / r.e, r.e);
  r.ok = r.ok && r.congruence && r.stabilizer_gcd == 1;
  return r;
}

PrimeFamilyReport prime_family(std::uint64_t p, std::uint64_t d, std::uint64_t cutoff) {
  if (!is_prime(p) || !is_prime(d)) throw InvalidArgument("prime_family needs prime p and d");
  if (d <= p) throw InvalidArgument("prime_family needs d > p");
  if (d > cutoff) throw BoundExceeded("d = " + std::to_string(d) + " exceeds cutoff " + std::to_string(cutoff));
  PrimeFamilyReport r;
  for (std::uint64_t x = d + 1; x < d * d; ++x)
    if (is_prime(x)) r.family.push_back(x);
  const BigInt bp = p;
  std::vector<BigInt> q, e;
  for (auto di : r.family) {
    q.push_back(pow(bp, static_cast<unsigned>(di)));
    e.push_back(projective_points(static_cast<std::uint32_t>(di), q.back()));
    bool coprime = gcd(BigInt(di), q.back() - 1) == 1;
    r.coprime.emplace_back(di, coprime);
    r.ok = r.ok && coprime;
  }
  for (std::size_t i = 0; i < r.family.size(); ++i)
    for (std::size_t j = 0; j < r.family.size(); ++j) {
      const std::uint64_t kmax = i == j ? r.family[j] - 1 : r.family[j];
      BigInt power = 1;
      for (std::uint32_t k = 1; k <= kmax; ++k) {
        power *= q[j];
        bool ok = gcd(e[i], power - 1) == 1;
        r.checks.push_back({r.family[i], r.family[j], k, ok});
        r.ok = r.ok && ok;
      }
    }
  return r;
}

bool solvable_f_ok(std::uint64_t f) { return f % 6 == 2 || f % 6 == 4; }

bool psl2_pair_infeasible(std::uint64_t e, std::uint64_t f) {
  if (e == 0 || e >= f) throw InvalidArgument("psl2_pair_infeasible needs 1 <= e < f");
  const BigInt two = 2;
  BigInt ep = pow(two, static_cast<unsigned>(e)), fp = pow(two, static_cast<unsigned>(f));
  bool all_one = gcd(ep + 1, fp + 1) == 1 && gcd(ep - 1, fp + 1) == 1 && gcd(ep + 1, fp - 1) == 1;
  return !all_one;
}

std::vector<std::vector<GroupDescriptor>> compatible_linear_tuples(std::uint32_t max_d, std::uint64_t max_q,
                                                                   std::size_t r, std::size_t limit) {
  std::vector<SimpleFactorProfile> profiles;
  for (std::uint32_t d = 2; d <= max_d; ++d) {
    if (!is_prime(d)) continue;
    for (std::uint64_t q = 2; q <= max_q && q <= (1u << 16); ++q) {
      if (prime_power(q).first == 0 || std::gcd(std::uint64_t{d}, q - 1) != 1) continue;
      if (d == 2 && q < 4) continue;  // PSL(2,2) and PSL(2,3) are solvable
      profiles.push_back(profile(GroupDescriptor::psl(d, static_cast<std::uint32_t>(q))));
    }
  }
  std::sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  const std::size_t n = profiles.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      compatible[i][j] = i != j && gcd(profiles[i].order, profiles[j].e) == 1 && gcd(profiles[j].order, profiles[i].e) == 1;

  std::vector<std::vector<GroupDescriptor>> out;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (out.size() >= limit) return;
    if (chosen.size() == r) {
      std::vector<GroupDescriptor> tuple;
      for (auto c : chosen) tuple.push_back(profiles[c].desc);
      out.push_back(std::move(tuple));
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return compatible[x][c]; })) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  if (r > 0) extend(extend, 0);
  return out;
}

}  // namespace hallskew
