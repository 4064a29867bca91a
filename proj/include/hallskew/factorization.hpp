#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "hallskew/coset.hpp"
#include "hallskew/perm_group.hpp"

namespace hallskew {

/// A certified exact factorization G = H<k> with H n <k> = 1.
///
/// Every g in G has a unique expression g = h * k^j with h in H and
/// 0 <= j < k_order; the cached table maps each right coset H*k^j to j.
class Factorization {
 public:
  const PermGroup& G() const noexcept { return g_; }
  const PermGroup& H() const noexcept { return h_; }
  const Permutation& k() const noexcept { return k_; }
  std::uint64_t k_order() const noexcept { return k_order_; }

  // gcd(|H|, |k|) = 1
  bool is_hall() const noexcept { return hall_; }
  // <k> contains no nontrivial normal subgroup of G.
  bool k_core_free() const noexcept { return k_core_free_; }
  // |core_G(H)|, when [G:H] was within the coset-action bound.
  const std::optional<BigInt>& h_core_order() const noexcept { return h_core_order_; }

  // (h, j) with g = h * k^j. Throws InvalidArgument when g is not in G.
  std::pair<Permutation, std::uint64_t> decompose(const Permutation& g) const;
  // Only the k-exponent; g must lie in G.
  std::uint64_t k_exponent(const Permutation& g) const;

  const RightCosetCanonizer& canonizer() const noexcept { return canon_; }

 private:
  friend Factorization certify_factorization(const PermGroup&, const PermGroup&, const Permutation&,
                                             std::uint64_t);
  PermGroup g_;
  PermGroup h_;
  Permutation k_;
  std::uint64_t k_order_ = 1;
  bool hall_ = false;
  bool k_core_free_ = false;
  std::optional<BigInt> h_core_order_;
  RightCosetCanonizer canon_;
  std::unordered_map<Permutation, std::uint64_t, PermutationHash> table_;
  std::vector<Permutation> k_inverse_powers_;
  Point fixed_point_ = 0;
  std::vector<std::uint64_t> point_to_exponent_;  // g(fixed_point_) -> j, when H fixes a point
};

// Checks H <= G, k in G, |H| |k| = |G| and k^j not in H for 0 < j < |k|;
// throws NotAFactorization naming the first failed condition.
Factorization certify_factorization(const PermGroup& group, const PermGroup& subgroup,
                                    const Permutation& k,
                                    std::uint64_t index_bound = kDefaultIndexBound);

// Whether the cyclic group <k> contains no nontrivial normal subgroup of G.
// Exact: a nontrivial normal subgroup inside <k> contains the unique subgroup
// of some prime order p, which is then normal itself.
bool cyclic_core_free(const PermGroup& group, const Permutation& k);

struct NormalSplit {
  bool normal = false;  // M is normal in G
  BigInt m_order, mh_order, mk_order;
  bool ok() const { return normal && m_order == mh_order * mk_order; }
};
// For M normal in G = H<k>: whether M = (M n H)(M n <k>), by orders (the two
// intersections meet trivially since H n <k> = 1).
NormalSplit normal_split(const Factorization& f, const PermGroup& m);

}  // namespace hallskew
