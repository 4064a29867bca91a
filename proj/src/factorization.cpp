#include "hallskew/factorization.hpp"

#include <algorithm>

#include "hallskew/errors.hpp"

namespace hallskew {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

bool cyclic_core_free(const PermGroup& group, const Permutation& k) {
  const std::uint64_t n = k.order();
  for (std::uint64_t p : prime_divisors(n)) {
    Permutation x = k.pow(static_cast<std::int64_t>(n / p));
    PermGroup minimal(group.degree(), {x});
    bool normal = true;
    for (const auto& g : group.generators())
      if (!minimal.contains(conjugate(x, g))) {
        normal = false;
        break;
      }
    if (normal) return false;
  }
  return true;
}

Factorization certify_factorization(const PermGroup& group, const PermGroup& subgroup,
                                    const Permutation& k, std::uint64_t index_bound) {
  using Reason = NotAFactorization::Reason;
  if (!subgroup.is_subgroup_of(group))
    throw NotAFactorization(Reason::NotSubgroup, "H is not a subgroup of G");
  if (k.degree() != group.degree() || !group.contains(k))
    throw NotAFactorization(Reason::NotMember, "k is not an element of G");
  const std::uint64_t n = k.order();
  if (subgroup.order() * n != group.order())
    throw NotAFactorization(Reason::OrderMismatch, "|H| * |k| = " + (subgroup.order() * n).str() +
                                                       " but |G| = " + group.order().str());

  Factorization f;
  f.g_ = group;
  f.h_ = subgroup;
  f.k_ = k;
  f.k_order_ = n;
  f.canon_ = RightCosetCanonizer(subgroup);
  // With the orders matching, H n <k> = 1 exactly when the cosets H k^j are distinct.
  Permutation power(group.degree());
  for (std::uint64_t j = 0; j < n; ++j) {
    auto [it, inserted] = f.table_.emplace(f.canon_.canonical(power), j);
    if (!inserted)
      throw NotAFactorization(Reason::NontrivialIntersection,
                              "k^" + std::to_string(j - it->second) + " lies in H");
    f.k_inverse_powers_.push_back(power.inverse());
    power = power * k;
  }
  // H fixing a point b with the k^j(b) distinct: H g = H k^j iff g(b) = k^j(b).
  for (Point b = 0; b < group.degree(); ++b) {
    if (!std::all_of(subgroup.generators().begin(), subgroup.generators().end(),
                     [&](const Permutation& x) { return x[b] == b; }))
      continue;
    std::vector<std::uint64_t> lookup(group.degree(), n);
    bool distinct = true;
    for (std::uint64_t j = 0; j < n && distinct; ++j) {
      const Point image = f.k_inverse_powers_[j].inverse()[b];
      distinct = lookup[image] == n;
      lookup[image] = j;
    }
    if (!distinct) continue;
    f.fixed_point_ = b;
    f.point_to_exponent_ = std::move(lookup);
    break;
  }
  f.hall_ = gcd(subgroup.order(), BigInt(n)) == 1;
  f.k_core_free_ = cyclic_core_free(group, k);
  if (group.order() / subgroup.order() <= index_bound)
    f.h_core_order_ = core(group, subgroup, index_bound).order();
  return f;
}

std::uint64_t Factorization::k_exponent(const Permutation& g) const {
  if (!point_to_exponent_.empty()) return point_to_exponent_[g[fixed_point_]];
  auto it = table_.find(canon_.canonical(g));
  if (it == table_.end()) throw InvalidArgument("element not in G");
  return it->second;
}

std::pair<Permutation, std::uint64_t> Factorization::decompose(const Permutation& g) const {
  if (g.degree() != g_.degree() || !g_.contains(g)) throw InvalidArgument("element not in G");
  std::uint64_t j = k_exponent(g);
  return {g * k_inverse_powers_[j], j};
}

NormalSplit normal_split(const Factorization& f, const PermGroup& m) {
  NormalSplit out;
  out.normal = m.is_subgroup_of(f.G()) && m.is_normal_in(f.G());
  out.m_order = m.order();
  out.mh_order = intersection_order(m, f.H());
  std::uint64_t in_m = 0;
  Permutation power(f.k().degree());
  for (std::uint64_t j = 0; j < f.k_order(); ++j, power = power * f.k()) in_m += m.contains(power);
  out.mk_order = in_m;
  return out;
}

}  // namespace hallskew
