#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hallskew/perm_group.hpp"

namespace hallskew {

/// Maps x to the lexicographically least element of the right coset H*x.
///
/// Holds a copy of H rebuilt with base 0, 1, ..., n-1 so that the greedy
/// level-by-level minimisation yields the lex-least image sequence.
class RightCosetCanonizer {
 public:
  RightCosetCanonizer() = default;
  explicit RightCosetCanonizer(const PermGroup& subgroup);

  const PermGroup& subgroup() const noexcept { return subgroup_; }
  Permutation canonical(const Permutation& x) const;

 private:
  PermGroup subgroup_;
};

struct CosetAction {
  PermGroup image;                          // action of G on the right cosets of H
  PermGroup core;                           // kernel of that action, on the original points
  std::vector<Permutation> representatives;  // canonical coset representatives, index order
  RightCosetCanonizer canonizer;
  std::unordered_map<Permutation, Point, PermutationHash> index;  // canonical rep -> coset

  // The permutation of cosets induced by an element g of G.
  Permutation image_of(const Permutation& g) const;
};

// Right-coset action of G on [G:H]. Coset 0 is H itself; the rest are numbered
// in breadth-first order over G's generators.
CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup,
                         std::uint64_t index_bound = kDefaultIndexBound);

// Largest normal subgroup of G inside H.
PermGroup core(const PermGroup& group, const PermGroup& subgroup,
               std::uint64_t index_bound = kDefaultIndexBound);

// Kernel of the homomorphism G -> image defined generator-wise by images[i].
PermGroup homomorphism_kernel(const PermGroup& group, const std::vector<Permutation>& images);

}  // namespace hallskew
