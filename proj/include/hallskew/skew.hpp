#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallskew/factorization.hpp"
#include "hallskew/numth.hpp"
#include "hallskew/perm_group.hpp"

namespace hallskew {

inline constexpr std::uint64_t kDefaultSkewElementBound = 4'000'000;
inline constexpr std::uint64_t kExhaustiveAxiomLimit = 2048;

/// A skew-morphism rho of H with power function pi.
///
/// Elements of H are numbered by their rank in H's stabilizer chain built on
/// base 0, 1, ..., n-1; index 0 is the identity. rho is a permutation of the
/// indices and pi holds one exponent per element, reduced mod order().
class SkewMorphism {
 public:
  SkewMorphism() = default;
  // Takes H with any chain; it is rebuilt on the canonical base. rho must be a
  // permutation of {0..|H|-1}; pi values are reduced modulo the order of rho.
  SkewMorphism(const PermGroup& base, std::vector<std::uint32_t> rho, std::vector<std::uint64_t> pi);

  const PermGroup& base() const noexcept { return base_; }
  std::uint64_t size() const noexcept { return rho_.size(); }
  Permutation element(std::uint64_t index) const { return base_.unrank(index); }
  std::uint64_t index_of(const Permutation& g) const { return base_.rank(g); }

  const std::vector<std::uint32_t>& rho() const noexcept { return rho_; }
  const std::vector<std::uint64_t>& pi() const noexcept { return pi_; }
  std::uint64_t order() const noexcept { return order_; }
  // pi = 1 everywhere, i.e. rho is an automorphism.
  bool trivial() const noexcept;

  const std::optional<Permutation>& source_k() const noexcept { return source_k_; }
  void set_source_k(Permutation k) { source_k_ = std::move(k); }

  // rho^m applied to an index.
  std::uint32_t rho_power(std::uint32_t index, std::uint64_t m) const noexcept;
  // Length of the rho-orbit through an index.
  std::uint64_t orbit_length(std::uint32_t index) const noexcept;

 private:
  PermGroup base_;
  std::vector<std::uint32_t> rho_;
  std::vector<std::uint64_t> pi_;
  std::uint64_t order_ = 1;
  std::optional<Permutation> source_k_;
  // rho as disjoint cycles: cycles_[cycle_start_[c] ..] lists cycle c.
  std::vector<std::uint32_t> cycle_of_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> cycles_;
  std::vector<std::uint32_t> cycle_start_;
};

// H with the chain used for element indices.
PermGroup canonical_base(const PermGroup& group);

struct SkewFromFactorization {
  SkewMorphism skew;
  bool faithful = false;  // order of rho equals |k|
};

// From k h = rho(h) k^pi(h). Throws InvalidArgument when <k> is not core-free
// and BoundExceeded when |H| exceeds element_bound.
SkewFromFactorization skew_from_factorization(const Factorization& f,
                                              std::uint64_t element_bound = kDefaultSkewElementBound);

struct AxiomCheck {
  bool ok = true;
  bool exhaustive = false;  // every pair (g, h) was tested directly
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;  // failing (g, h) as indices
  std::string failure;
};

// rho(1) = 1, pi(1) = 1 and rho(gh) = rho(g) rho^pi(g)(h) for all g, h.
//
// Up to exhaustive_limit elements every pair is tested. Above it the check is
// still exact but visits O(|H| (|S| + |B|)) pairs: S is the rho-closure of a
// generating set and B a set of elements whose rho-orbit lengths have lcm
// |rho|. If the axiom holds at (s, h) for s in S, the set of g satisfying it
// for all h is closed under products, so an admissible power function exists;
// testing every g against B then pins pi(g) modulo |rho|.
AxiomCheck verify_axioms(const SkewMorphism& s, std::uint64_t exhaustive_limit = kExhaustiveAxiomLimit);

// gcd(|H|, |rho|) = 1
bool is_hall_skew(const SkewMorphism& s);

// Every permutation of H fixing the identity that admits a power function,
// in lexicographic order of rho. Requires |H| <= bound.
std::vector<SkewMorphism> brute_enumerate(const PermGroup& group, std::uint64_t bound = 10);

// Whether rho(gh) = rho(g) rho(h) for all g, h.
bool is_automorphism(const SkewMorphism& s);

struct SocleFactor {
  BigInt order;
  bool simple = false;  // every normal-closure probe generated the whole factor
  std::optional<GroupDescriptor> profile;
};

struct ShapeReport {
  int shape = 0;  // 1, 2, or 0 when neither could be verified
  bool hall = false;
  BigInt n_order;         // |N|, N = core of H
  BigInt quotient_order;  // |G/N|
  BigInt k_bar_order;     // order of the image of k in G/N
  // shape (1)
  bool k_bar_normal = false;
  BigInt complement_order;
  bool complement_faithful = false;
  // shape (2)
  std::vector<SocleFactor> factors;
  bool compatible = false;
  std::string detail;
};

// Decides which of the two structures G/N has, for N the core of H.
ShapeReport shape_check(const Factorization& f, std::uint64_t index_bound = kDefaultIndexBound,
                        std::uint64_t enumeration_bound = kDefaultEnumerationBound);

}  // namespace hallskew
