#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hallskew {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
///
/// Products are left-to-right: (p * q)(x) = q(p(x)), so x^(pq) = (x^p)^q and
/// conjugation is x^g = g^-1 * x * g. Points are 0-based in memory and
/// 1-based in every textual form ("(1,2)(3,4)").
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Caller guarantees `images` is a bijection (e.g. a product of permutations).
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // 0-based cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  // Parses 1-based disjoint-cycle notation. Accepts "(1,2)(3,4)", "(1 2)(3 4)"
  // and the compact "(13542)" form when every point is a single digit.
  // degree 0 means "largest point mentioned".
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  // Least m > 0 with p^m = 1. Throws BoundExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;

  bool is_involution() const noexcept;
  bool is_even() const;
  std::vector<Point> fixed_points() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles, 0-based
  std::vector<std::size_t> cycle_type() const;     // sorted nontrivial cycle lengths

  // 1-based disjoint-cycle string; the identity prints as "()".
  std::string to_string() const;

  // *this = p * q, reusing storage. Degrees must agree.
  void assign_product(const Permutation& p, const Permutation& q);

  // Extends to a larger degree, fixing the new points.
  Permutation extended(std::size_t degree) const;
  // Shifts this permutation onto points [offset, offset + degree()) of a larger domain.
  Permutation embedded(std::size_t degree, std::size_t offset) const;
  // Restricts to [offset, offset + count); the block must be invariant.
  Permutation restricted(std::size_t offset, std::size_t count) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// Left-to-right product; throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Writes p * q into out (resized as needed); no degree check.
void compose_into(const Permutation& p, const Permutation& q, std::vector<Point>& out);

// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

// Least m > 0 with p^m = identity.
inline std::uint64_t element_order(const Permutation& p) { return p.order(); }

std::uint64_t hash_images(std::span<const Point> images) noexcept;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return static_cast<std::size_t>(hash_images(p.images()));
  }
};

}  // namespace hallskew
