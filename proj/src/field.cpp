#include "hallskew/field.hpp"

#include <map>
#include <mutex>

#include "hallskew/errors.hpp"

namespace hallskew {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  auto primes = prime_factors(q);
  if (primes.size() != 1) return {0, 0};
  std::uint32_t f = 0;
  for (std::uint64_t r = q; r > 1; r /= primes[0]) ++f;
  return {static_cast<std::uint32_t>(primes[0]), f};
}

namespace {

// Digits of a code, least significant first.
std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t f) {
  std::vector<std::uint32_t> d(f);
  for (std::uint32_t i = 0; i < f; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Powers of x modulo a monic polynomial over GF(p): fills `exp` and reports
// whether x has multiplicative order exactly p^f - 1.
bool x_is_primitive(const std::vector<std::uint32_t>& modulus, std::uint32_t p, std::uint32_t f,
                    std::uint32_t q, std::vector<std::uint32_t>* exp) {
  if (modulus[0] == 0) return false;
  std::vector<std::uint32_t> cur(f, 0);
  cur[0] = 1;
  if (exp) exp->assign(q - 1, 0);
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    std::uint32_t code = encode(cur, p);
    if (k > 0 && code == 1) return false;
    if (exp) (*exp)[k] = code;
    // multiply by x: shift up, then reduce x^f = -sum c_i x^i
    std::uint32_t top = cur[f - 1];
    for (std::uint32_t i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::uint32_t i = 0; i < f; ++i) cur[i] = (cur[i] + (p - modulus[i]) * top) % p;
  }
  return encode(cur, p) == 1;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f) : p_(p), f_(f), q_(1) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw InvalidArgument("field degree must be positive");
  for (std::uint32_t i = 0; i < f; ++i) {
    if (q_ > (1u << 16) / p) throw InvalidArgument("field order exceeds 2^16");
    q_ *= p;
  }
  // Candidates in lex order of (c_{f-1}, ..., c_0) are the codes 0, 1, 2, ...
  for (std::uint32_t code = 0; code < q_; ++code) {
    auto m = digits(code, p, f);
    if (x_is_primitive(m, p, f, q_, &exp_)) {
      modulus_ = std::move(m);
      break;
    }
  }
  if (modulus_.empty()) throw Error("no primitive polynomial found");
  log_.assign(q_, 0);
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

std::shared_ptr<const Field> Field::get(std::uint32_t p, std::uint32_t f) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, f}];
  if (!slot) slot = std::make_shared<const Field>(p, f);
  return slot;
}

Field::Element Field::add(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Element Field::neg(Element a) const noexcept {
  if (p_ == 2) return a;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Field::Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Field::Element Field::inv(Element a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Element a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero");
  return log_[a];
}

namespace {

using Poly = std::vector<Field::Element>;  // residues mod a monic degree-d polynomial, length d

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& modulus) {
  const std::size_t d = modulus.size();
  std::vector<Field::Element> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  // x^d = -sum c_i x^i
  for (std::size_t k = prod.size(); k-- > d;) {
    Field::Element top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = F.sub(prod[k - d + i], F.mul(top, modulus[i]));
  }
  prod.resize(d);
  return prod;
}

Poly powmod_x(const Field& F, std::uint64_t e, const Poly& modulus) {
  const std::size_t d = modulus.size();
  Poly result(d, 0), base(d, 0);
  result[0] = 1;
  if (d == 1)
    base[0] = F.neg(modulus[0]);
  else
    base[1] = 1;
  while (e) {
    if (e & 1) result = mulmod(F, result, base, modulus);
    base = mulmod(F, base, base, modulus);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

}  // namespace

std::vector<Field::Element> primitive_polynomial(const Field& field, std::uint32_t d) {
  if (d == 0) throw InvalidArgument("polynomial degree must be positive");
  const std::uint64_t q = field.order();
  std::uint64_t total = 1, n = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (total > (std::uint64_t{1} << 40) / q) throw BoundExceeded("q^d too large");
    total *= q;
  }
  n = total - 1;
  auto primes = prime_factors(n);
  // x has order exactly n iff x^n = 1 and x^(n/r) != 1 for each prime r | n;
  // a reducible modulus cannot have a unit of order q^d - 1.
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly m(d);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      m[i] = static_cast<Field::Element>(c % q);
      c /= q;
    }
    if (m[0] == 0) continue;
    if (!is_one(powmod_x(field, n, m))) continue;
    bool primitive = true;
    for (auto r : primes)
      if (is_one(powmod_x(field, n / r, m))) {
        primitive = false;
        break;
      }
    if (primitive) return m;
  }
  throw Error("no primitive polynomial found");
}

}  // namespace hallskew
