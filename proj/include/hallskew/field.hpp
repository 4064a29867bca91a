#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hallskew {

/// GF(p^f) with q = p^f <= 2^16.
///
/// An element is coded as the integer sum c_i p^i of its coefficients in the
/// polynomial basis 1, x, ..., x^(f-1), where x is a root of the modulus. The
/// modulus is the lexicographically least monic primitive polynomial of degree
/// f, comparing (c_{f-1}, ..., c_0), so x itself generates the multiplicative
/// group. Multiplication goes through log / exp tables.
class Field {
 public:
  using Element = std::uint32_t;

  Field(std::uint32_t p, std::uint32_t f);

  // Shared instance per (p, f); tables are built once.
  static std::shared_ptr<const Field> get(std::uint32_t p, std::uint32_t f);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return f_; }
  std::uint32_t order() const noexcept { return q_; }
  // Non-leading coefficients c_0..c_{f-1} of the modulus (which is monic).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element primitive() const noexcept { return exp_[1]; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Element inv(Element a) const;  // throws on 0
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  std::uint32_t log(Element a) const;  // throws on 0

 private:
  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

// If q is a prime power p^f, returns {p, f}; otherwise {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept;

// Lexicographically least monic polynomial of degree d over `field` whose root
// generates GF(q^d)^*. Returns the non-leading coefficients c_0..c_{d-1}.
std::vector<Field::Element> primitive_polynomial(const Field& field, std::uint32_t d);

}  // namespace hallskew
