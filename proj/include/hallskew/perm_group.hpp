#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "hallskew/bigint.hpp"
#include "hallskew/permutation.hpp"

namespace hallskew {

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;
inline constexpr std::uint64_t kDefaultIndexBound = 100'000;

namespace detail {

// One level of a stabilizer chain: the orbit of the base point under the
// strong generators that fix all earlier base points, with a Schreier tree.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> inverse_generators;
  std::vector<Point> orbit;
  std::vector<std::uint32_t> position;     // point -> index in orbit, or kNone
  std::vector<std::uint32_t> parent_label;  // orbit index -> generator used to reach it
  std::vector<std::uint32_t> parent;        // orbit index -> orbit index of predecessor
  // Explicit coset representatives; empty when degree * |orbit| is too large,
  // in which case they are rebuilt from the tree on demand.
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;

  static constexpr std::uint32_t kNone = 0xffffffffu;

  std::uint32_t index_of(Point x) const noexcept { return position[x]; }
  void recompute(std::size_t degree);
  Permutation representative(std::uint32_t index, std::size_t degree) const;
  // g <- g * u^-1, where u is the representative at `index`.
  void strip(Permutation& g, std::uint32_t index, Permutation& scratch) const;
};

}  // namespace detail

/// A permutation group held as a base and strong generating set.
///
/// Construction runs deterministic Schreier-Sims; the base starts with the
/// optional prefix and is extended by the smallest point moved by each new
/// sifting residue. Levels with trivial fundamental orbit are dropped once the
/// chain is complete. Immutable after construction.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, std::vector<Permutation>{}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const BigInt& order() const noexcept { return order_; }
  std::uint64_t order_u64() const { return to_u64(order_); }
  bool is_trivial() const noexcept { return levels_.empty(); }

  std::vector<Point> base() const;
  std::size_t chain_length() const noexcept { return levels_.size(); }
  std::span<const Point> fundamental_orbit(std::size_t level) const { return levels_[level].orbit; }
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }

  bool contains(const Permutation& g) const;

  // Position of g in the enumeration order of for_each_element.
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;
  // rank() for an image vector already known to lie in the group; no checks.
  std::uint64_t rank_member(std::span<const Point> images) const;

  // Visits every element exactly once in a fixed order. The callback receives a
  // reference to a reused buffer; it may return false to stop early.
  template <class F>
  void for_each_element(F&& visit) const;

  // All elements in enumeration order; throws BoundExceeded above `bound`.
  std::vector<Permutation> elements(std::uint64_t bound = kDefaultEnumerationBound) const;

  std::vector<Point> orbit(Point x) const;
  bool is_transitive() const;

  PermGroup stabilizer(Point x) const;
  PermGroup pointwise_stabilizer(std::span<const Point> points) const;
  // The same group rebuilt with a prescribed base prefix.
  PermGroup with_base_prefix(std::span<const Point> prefix) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& other) const;

 private:
  friend class RightCosetCanonizer;

  static PermGroup from_levels(std::size_t degree, std::vector<detail::ChainLevel> levels);

  void build(std::span<const Point> prefix);
  void schreier_sims();
  void add_level(Point base_point);
  // Sifts g from level `start`; returns the level where it dropped out
  // (levels_.size() if it sifted through).
  std::size_t strip(Permutation& g, std::size_t start, Permutation& scratch) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<detail::ChainLevel> levels_;
  BigInt order_ = 1;
};

// Public constructor used by callers that hand in user data; rejects an empty set.
PermGroup group_from_generators(std::vector<Permutation> generators);

// Smallest normal subgroup of `group` containing `seeds`.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds);
PermGroup derived_subgroup(const PermGroup& group);

// Exact count of order-2 elements by enumeration.
BigInt count_involutions(const PermGroup& group, std::uint64_t bound = kDefaultEnumerationBound);

// |A n B|: enumerates the smaller group and sifts into the larger.
BigInt intersection_order(const PermGroup& a, const PermGroup& b,
                          std::uint64_t bound = kDefaultEnumerationBound);

// gcd(|H|, [G:H]) = 1. Throws InvalidArgument if H is not a subgroup of G.
bool is_hall_subgroup(const PermGroup& group, const PermGroup& subgroup);

template <class F>
void PermGroup::for_each_element(F&& visit) const {
  using Result = std::invoke_result_t<F&, const Permutation&>;
  const std::size_t depth = levels_.size();
  if (depth == 0) {
    Permutation id(degree_);
    visit(static_cast<const Permutation&>(id));
    return;
  }
  std::vector<Permutation> products(depth, Permutation(degree_));
  std::vector<std::uint32_t> digit(depth, 0);
  std::vector<Permutation> reps(depth);

  auto rep = [&](std::size_t l, std::uint32_t d) -> const Permutation& {
    const auto& level = levels_[l];
    if (!level.transversal.empty()) return level.transversal[d];
    reps[l] = level.representative(d, degree_);
    return reps[l];
  };

  // products[l] = u_l * products[l-1]; products[depth-1] is the element.
  std::size_t l = 0;
  products[0] = rep(0, 0);
  while (true) {
    if (l + 1 < depth) {
      ++l;
      digit[l] = 0;
      products[l].assign_product(rep(l, 0), products[l - 1]);
      continue;
    }
    if constexpr (std::is_same_v<Result, bool>) {
      if (!visit(static_cast<const Permutation&>(products[l]))) return;
    } else {
      visit(static_cast<const Permutation&>(products[l]));
    }
    // advance the odometer
    while (true) {
      if (++digit[l] < levels_[l].orbit.size()) {
        if (l == 0)
          products[0] = rep(0, digit[0]);
        else
          products[l].assign_product(rep(l, digit[l]), products[l - 1]);
        break;
      }
      if (l == 0) return;
      --l;
    }
  }
}

}  // namespace hallskew
