#include "hallskew/skew.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "hallskew/coset.hpp"
#include "hallskew/errors.hpp"

namespace hallskew {

namespace {

// All elements of a group as one flat array, in rank order, with a flattened
// copy of the chain's inverse transversals for allocation-free ranking.
class ElementTable {
 public:
  static constexpr std::size_t kBatch = 64;

  ElementTable(const PermGroup& group, std::uint64_t bound) : degree_(group.degree()) {
    if (group.order() > bound)
      throw BoundExceeded("|H| = " + group.order().str() + " exceeds element bound " + std::to_string(bound));
    if (degree_ > 0xffff) throw BoundExceeded("degree too large for the element table");
    size_ = group.order_u64();
    data_.resize(size_ * degree_);
    std::size_t at = 0;
    group.for_each_element([&](const Permutation& g) {
      for (Point x = 0; x < degree_; ++x) data_[at++] = static_cast<std::uint16_t>(g[x]);
    });

    // u_{l,d} has rank d * stride_l.
    const std::size_t depth = group.chain_length();
    base_ = group.base();
    std::uint64_t stride = size_;
    for (std::size_t l = 0; l < depth; ++l) {
      const auto orbit = group.fundamental_orbit(l);
      stride /= orbit.size();
      sizes_.push_back(orbit.size());
      strides_.push_back(stride);
      position_offset_.push_back(positions_.size());
      inverse_offset_.push_back(inverses_.size());
      positions_.resize(positions_.size() + degree_, 0);
      inverses_.resize(inverses_.size() + orbit.size() * degree_);
      std::uint16_t* position = &positions_[position_offset_[l]];
      std::uint16_t* inverse = &inverses_[inverse_offset_[l]];
      for (std::size_t d = 0; d < orbit.size(); ++d) {
        const std::uint16_t* u = row(d * stride);
        position[u[base_[l]]] = static_cast<std::uint16_t>(d);
        for (std::size_t x = 0; x < degree_; ++x) inverse[d * degree_ + u[x]] = static_cast<std::uint16_t>(x);
      }
    }
    buffer_.resize(kBatch * degree_);
  }

  std::uint64_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::uint16_t* row(std::uint64_t index) const noexcept { return &data_[index * degree_]; }

  // Ranks of count <= kBatch image arrays stored back to back. Level-major so
  // the lookups of different elements overlap.
  void rank_batch(const std::uint16_t* images, std::size_t count, std::uint64_t* out) const noexcept {
    const std::size_t depth = base_.size();
    for (std::size_t c = 0; c < count; ++c) {
      // y[j]: image of base point j under x u_0^-1 ... u_{l-1}^-1, for j >= l
      std::uint16_t y[64];
      const std::uint16_t* x = images + c * degree_;
      for (std::size_t j = 0; j < depth; ++j) y[j] = x[base_[j]];
      std::uint64_t r = 0;
      for (std::size_t l = 0; l < depth; ++l) {
        const std::uint32_t d = positions_[position_offset_[l] + y[l]];
        r = r * sizes_[l] + d;
        const std::uint16_t* inverse = &inverses_[inverse_offset_[l] + d * degree_];
        for (std::size_t j = l + 1; j < depth; ++j) y[j] = inverse[y[j]];
      }
      out[c] = r;
    }
  }

  // out[a] = index of a * b for every a, walking the chain once. With
  // a = x u (x in G_1, u a level-0 representative), u b = w u' for w in G_1, so
  // a b = (x w) u' and the lower digits come from the same problem in G_1.
  void right_multiplication(std::uint64_t b, std::vector<std::uint32_t>& out) const {
    out.resize(size_);
    if (base_.empty()) {
      out[0] = 0;
      return;
    }
    std::vector<std::uint16_t> w((base_.size() + 1) * degree_);
    std::copy_n(row(b), degree_, w.begin());
    std::uint32_t* at = out.data();
    descend(0, 0, w.data(), at);
  }

  // Index of the inverse of every element.
  void inversion(std::vector<std::uint32_t>& out) {
    out.resize(size_);
    std::uint64_t ranks[kBatch];
    for (std::uint64_t start = 0; start < size_; start += kBatch) {
      const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, size_ - start));
      for (std::size_t c = 0; c < count; ++c) {
        const std::uint16_t* x = row(start + c);
        for (std::size_t p = 0; p < degree_; ++p) buffer_[c * degree_ + x[p]] = static_cast<std::uint16_t>(p);
      }
      rank_batch(buffer_.data(), count, ranks);
      for (std::size_t c = 0; c < count; ++c) out[start + c] = static_cast<std::uint32_t>(ranks[c]);
    }
  }

  // Index of a * b.
  std::uint64_t product(std::uint64_t a, std::uint64_t b) {
    multiply(a, b, buffer_.data());
    std::uint64_t r;
    rank_batch(buffer_.data(), 1, &r);
    return r;
  }

  // Indices of a[c] * b[c] for c < count <= kBatch.
  void product_batch(const std::uint32_t* a, const std::uint32_t* b, std::size_t count, std::uint64_t* out) {
    for (std::size_t c = 0; c < count; ++c) multiply(a[c], b[c], &buffer_[c * degree_]);
    rank_batch(buffer_.data(), count, out);
  }

  // Whether a * b is the element at index c.
  bool product_is(std::uint64_t a, std::uint64_t b, std::uint64_t c) const noexcept {
    const std::uint16_t* pa = row(a);
    const std::uint16_t* pb = row(b);
    const std::uint16_t* pc = row(c);
    for (std::size_t x = 0; x < degree_; ++x)
      if (pb[pa[x]] != pc[x]) return false;
    return true;
  }

 private:
  // w holds the right factor at level l; elements of G_l are enumerated in rank order.
  void descend(std::size_t l, std::uint64_t acc, std::uint16_t* w_all, std::uint32_t*& at) const {
    const std::uint16_t* w = w_all + l * degree_;
    const std::uint16_t* position = &positions_[position_offset_[l]];
    const std::uint64_t size = sizes_[l], stride = strides_[l];
    const Point b = base_[l];
    if (l + 1 == base_.size()) {
      for (std::uint64_t d = 0; d < size; ++d) *at++ = static_cast<std::uint32_t>(acc + position[w[row(d * stride)[b]]]);
      return;
    }
    std::uint16_t* next = w_all + (l + 1) * degree_;
    for (std::uint64_t d = 0; d < size; ++d) {
      const std::uint16_t* u = row(d * stride);
      const std::uint32_t image_digit = position[w[u[b]]];
      const std::uint16_t* inverse = &inverses_[inverse_offset_[l] + image_digit * degree_];
      for (std::size_t x = 0; x < degree_; ++x) next[x] = inverse[w[u[x]]];
      descend(l + 1, acc + image_digit * stride, w_all, at);
    }
  }

  void multiply(std::uint64_t a, std::uint64_t b, std::uint16_t* out) const noexcept {
    const std::uint16_t* pa = row(a);
    const std::uint16_t* pb = row(b);
    for (std::size_t x = 0; x < degree_; ++x) out[x] = pb[pa[x]];
  }

  std::size_t degree_;
  std::uint64_t size_ = 0;
  std::vector<std::uint16_t> data_;
  std::vector<Point> base_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint16_t> positions_;
  std::vector<std::uint16_t> inverses_;
  std::vector<std::size_t> position_offset_;
  std::vector<std::size_t> inverse_offset_;
  std::vector<std::uint16_t> buffer_;
};

// Checks rho(gh) = rho(g) rho^pi(g)(h) over queued pairs, a batch at a time.
class AxiomBatch {
 public:
  AxiomBatch(const SkewMorphism& s, ElementTable& table) : s_(s), table_(table) {}

  // Queues (g, h) with image = rho^pi(g)(h). False once a failing pair has been
  // found; witness() names it.
  bool push(std::uint32_t g, std::uint32_t h, std::uint32_t image) {
    g_[count_] = g;
    h_[count_] = h;
    image_[count_] = image;
    if (++count_ == ElementTable::kBatch) return flush();
    return true;
  }

  bool flush() {
    const auto& rho = s_.rho();
    std::uint64_t gh[ElementTable::kBatch];
    table_.product_batch(g_, h_, count_, gh);
    std::uint32_t lhs[ElementTable::kBatch];
    for (std::size_t c = 0; c < count_; ++c) lhs[c] = rho[gh[c]];
    for (std::size_t c = 0; c < count_; ++c)
      if (!table_.product_is(rho[g_[c]], image_[c], lhs[c])) {
        witness_ = {g_[c], h_[c]};
        count_ = 0;
        return false;
      }
    count_ = 0;
    return true;
  }

  std::pair<std::uint64_t, std::uint64_t> witness() const noexcept { return witness_; }

 private:
  const SkewMorphism& s_;
  ElementTable& table_;
  std::uint32_t g_[ElementTable::kBatch];
  std::uint32_t h_[ElementTable::kBatch];
  std::uint32_t image_[ElementTable::kBatch];
  std::size_t count_ = 0;
  std::pair<std::uint64_t, std::uint64_t> witness_;
};

// The cycles of rho, laid out one after another.
struct Cycles {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> starts;  // one past the end: points.size()

  explicit Cycles(const std::vector<std::uint32_t>& rho) {
    std::vector<bool> seen(rho.size(), false);
    for (std::uint32_t start = 0; start < rho.size(); ++start) {
      if (seen[start]) continue;
      starts.push_back(static_cast<std::uint32_t>(points.size()));
      for (std::uint32_t x = start; !seen[x]; x = rho[x]) {
        seen[x] = true;
        points.push_back(x);
      }
    }
    starts.push_back(static_cast<std::uint32_t>(points.size()));
  }

  // power[x] = rho^m(x)
  void fill_power(std::uint64_t m, std::vector<std::uint32_t>& power) const {
    for (std::size_t c = 0; c + 1 < starts.size(); ++c) {
      const std::uint32_t* cycle = &points[starts[c]];
      const std::size_t len = starts[c + 1] - starts[c], shift = m % len;
      for (std::size_t i = 0, j = shift; i < len; ++i, j = j + 1 == len ? 0 : j + 1) power[cycle[i]] = cycle[j];
    }
  }
};

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t factor = b / g;
  if (factor != 0 && a > std::numeric_limits<std::uint64_t>::max() / factor)
    throw BoundExceeded("order of rho does not fit in 64 bits");
  return a * factor;
}

}  // namespace

PermGroup canonical_base(const PermGroup& group) {
  std::vector<Point> all(group.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return group.with_base_prefix(all);
}

SkewMorphism::SkewMorphism(const PermGroup& base, std::vector<std::uint32_t> rho, std::vector<std::uint64_t> pi)
    : base_(canonical_base(base)), rho_(std::move(rho)), pi_(std::move(pi)) {
  const std::uint64_t n = base_.order_u64();
  if (rho_.size() != n || pi_.size() != n) throw InvalidArgument("rho and pi need one entry per element of H");
  std::vector<bool> seen(n, false);
  for (std::uint32_t image : rho_) {
    if (image >= n || seen[image]) throw InvalidArgument("rho is not a permutation of H");
    seen[image] = true;
  }
  cycle_of_.assign(n, 0);
  position_.assign(n, 0);
  std::fill(seen.begin(), seen.end(), false);
  order_ = 1;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    const auto id = static_cast<std::uint32_t>(cycle_start_.size());
    cycle_start_.push_back(static_cast<std::uint32_t>(cycles_.size()));
    for (std::uint32_t x = start; !seen[x]; x = rho_[x]) {
      seen[x] = true;
      cycle_of_[x] = id;
      position_[x] = static_cast<std::uint32_t>(cycles_.size() - cycle_start_.back());
      cycles_.push_back(x);
    }
    order_ = checked_lcm(order_, cycles_.size() - cycle_start_.back());
  }
  cycle_start_.push_back(static_cast<std::uint32_t>(cycles_.size()));
  for (auto& m : pi_) m %= order_;
}

bool SkewMorphism::trivial() const noexcept {
  const std::uint64_t one = 1 % order_;
  return std::all_of(pi_.begin(), pi_.end(), [&](std::uint64_t m) { return m == one; });
}

std::uint64_t SkewMorphism::orbit_length(std::uint32_t index) const noexcept {
  const std::uint32_t c = cycle_of_[index];
  return cycle_start_[c + 1] - cycle_start_[c];
}

std::uint32_t SkewMorphism::rho_power(std::uint32_t index, std::uint64_t m) const noexcept {
  const std::uint32_t c = cycle_of_[index];
  const std::uint64_t len = cycle_start_[c + 1] - cycle_start_[c];
  return cycles_[cycle_start_[c] + (position_[index] + m % len) % len];
}

SkewFromFactorization skew_from_factorization(const Factorization& f, std::uint64_t element_bound) {
  if (!f.k_core_free()) throw InvalidArgument("<k> contains a nontrivial normal subgroup of G");
  const PermGroup& h = f.canonizer().subgroup();
  if (h.order() > element_bound)
    throw BoundExceeded("|H| = " + h.order().str() + " exceeds element bound " + std::to_string(element_bound));
  const std::uint64_t n = h.order_u64();
  std::vector<Permutation> k_inverse_powers;
  const Permutation k_inverse = f.k().inverse();
  Permutation power(f.k().degree());
  for (std::uint64_t j = 0; j < f.k_order(); ++j) {
    k_inverse_powers.push_back(power);
    power = power * k_inverse;
  }

  std::vector<std::uint32_t> rho(n);
  std::vector<std::uint64_t> pi(n);
  Permutation kx, y;
  std::uint64_t r = 0;
  h.for_each_element([&](const Permutation& x) {
    // k x = rho(x) k^pi(x)
    kx.assign_product(f.k(), x);
    const std::uint64_t j = f.k_exponent(kx);
    y.assign_product(kx, k_inverse_powers[j]);
    rho[r] = static_cast<std::uint32_t>(h.rank_member(y.images()));
    pi[r] = j;
    ++r;
  });
  SkewFromFactorization out{SkewMorphism(h, std::move(rho), std::move(pi)), false};
  out.faithful = out.skew.order() == f.k_order();
  out.skew.set_source_k(f.k());
  return out;
}

AxiomCheck verify_axioms(const SkewMorphism& s, std::uint64_t exhaustive_limit) {
  AxiomCheck check;
  const std::uint64_t n = s.size();
  const auto& rho = s.rho();
  const auto& pi = s.pi();
  auto fail = [&](std::uint64_t g, std::uint64_t h, std::string why) {
    check.ok = false;
    check.witness = std::make_pair(g, h);
    check.failure = std::move(why);
    return check;
  };
  if (rho[0] != 0) return fail(0, 0, "rho does not fix the identity");
  if (pi[0] != 1 % s.order()) return fail(0, 0, "pi(1) is not 1");

  ElementTable table(s.base(), std::numeric_limits<std::uint64_t>::max());
  AxiomBatch batch(s, table);
  auto failed = [&]() {
    const auto [g, h] = batch.witness();
    return fail(g, h, "rho(gh) != rho(g) rho^pi(g)(h)");
  };

  if (n <= exhaustive_limit) {
    check.exhaustive = true;
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h)
        if (!batch.push(g, h, s.rho_power(h, pi[g]))) return failed();
    if (!batch.flush()) return failed();
    return check;
  }

  // A rho-invariant generating set: whole rho-orbits of generators not yet covered.
  std::vector<std::vector<std::uint32_t>> seed_orbits;
  std::vector<Permutation> spanning;
  PermGroup span = PermGroup::trivial(s.base().degree());
  for (const auto& g : s.base().generators()) {
    if (span.contains(g)) continue;
    const auto start = static_cast<std::uint32_t>(s.base().rank_member(g.images()));
    seed_orbits.emplace_back();
    std::uint32_t x = start;
    do {
      seed_orbits.back().push_back(x);
      spanning.push_back(s.element(x));
      x = rho[x];
    } while (x != start);
    span = PermGroup(s.base().degree(), spanning);
  }

  // Left multiplication by g, as g h = (h^-1 g^-1)^-1.
  std::vector<std::uint32_t> inverse, scratch, power(n);
  table.inversion(inverse);
  auto left_multiplication = [&](std::uint32_t g, std::vector<std::uint32_t>& out) {
    table.right_multiplication(inverse[g], scratch);
    out.resize(n);
    for (std::uint32_t h = 0; h < n; ++h) out[h] = inverse[scratch[inverse[h]]];
  };

  // rho(g h) = rho(g) rho^pi(g)(h) for g in the orbit and every h; rho(g) is the
  // next seed of the same orbit, so its left multiplication is computed anyway.
  const Cycles cycles(rho);
  std::vector<std::uint32_t> first, current, next;
  for (const auto& orbit : seed_orbits) {
    left_multiplication(orbit[0], first);
    current = first;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const std::uint32_t g = orbit[i];
      if (i + 1 < orbit.size())
        left_multiplication(orbit[i + 1], next);
      else
        next = first;
      cycles.fill_power(pi[g], power);
      for (std::uint32_t h = 0; h < n; ++h)
        if (rho[current[h]] != next[power[h]]) return fail(g, h, "rho(gh) != rho(g) rho^pi(g)(h)");
      std::swap(current, next);
    }
  }

  // Elements whose rho-orbit lengths have lcm |rho| determine pi modulo |rho|.
  // rho(g b) = rho(g) y with y = rho^pi(g)(b), grouped by y.
  std::uint64_t reached = 1;
  std::vector<std::uint32_t> times_b, times_y, bucket(n);
  for (std::uint32_t b = 0; b < n && reached != s.order(); ++b) {
    const std::uint64_t grown = std::lcm(reached, s.orbit_length(b));
    if (grown == reached) continue;
    reached = grown;
    const std::uint64_t len = s.orbit_length(b);
    table.right_multiplication(b, times_b);
    for (std::uint32_t g = 0; g < n; ++g) bucket[g] = static_cast<std::uint32_t>(pi[g] % len);
    for (std::uint32_t j = 0; j < len; ++j) {
      table.right_multiplication(s.rho_power(b, j), times_y);
      for (std::uint32_t g = 0; g < n; ++g)
        if (bucket[g] == j && rho[times_b[g]] != times_y[rho[g]])
          return fail(g, b, "rho(gh) != rho(g) rho^pi(g)(h)");
    }
  }
  return check;
}

bool is_hall_skew(const SkewMorphism& s) { return std::gcd(s.size(), s.order()) == 1; }

bool is_automorphism(const SkewMorphism& s) { return s.trivial() && verify_axioms(s).ok; }

std::vector<SkewMorphism> brute_enumerate(const PermGroup& group, std::uint64_t bound) {
  if (group.order() > bound)
    throw BoundExceeded("|H| = " + group.order().str() + " exceeds brute-force bound " + std::to_string(bound));
  const PermGroup base = canonical_base(group);
  const std::uint64_t n = base.order_u64();
  ElementTable table(base, bound);
  std::vector<std::uint32_t> mult(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<std::uint32_t>(table.product(a, b));

  std::vector<SkewMorphism> found;
  std::vector<std::uint32_t> rho(n);
  std::iota(rho.begin(), rho.end(), 0u);
  std::vector<std::vector<std::uint32_t>> powers;
  std::vector<std::uint64_t> pi(n);
  do {
    // powers[m] = rho^m
    powers.assign(1, std::vector<std::uint32_t>(n));
    std::iota(powers[0].begin(), powers[0].end(), 0u);
    while (true) {
      std::vector<std::uint32_t> next(n);
      for (std::uint64_t x = 0; x < n; ++x) next[x] = rho[powers.back()[x]];
      if (next == powers[0]) break;
      powers.push_back(std::move(next));
    }
    const std::uint64_t order = powers.size();
    bool admissible = true;
    for (std::uint64_t g = 0; g < n && admissible; ++g) {
      bool solved = false;
      for (std::uint64_t m = 0; m < order && !solved; ++m) {
        bool all = true;
        for (std::uint64_t h = 0; h < n && all; ++h)
          all = rho[mult[g * n + h]] == mult[rho[g] * n + powers[m][h]];
        if (all) {
          pi[g] = m;
          solved = true;
        }
      }
      admissible = solved;
    }
    if (!admissible) continue;
    SkewMorphism s(base, rho, pi);
    if (verify_axioms(s).ok) found.push_back(std::move(s));
  } while (std::next_permutation(rho.begin() + 1, rho.end()));
  return found;
}

namespace {

// Table 1 profiles that a simple group of the given order could match.
std::optional<GroupDescriptor> match_profile(const BigInt& order) {
  std::vector<GroupDescriptor> candidates;
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) candidates.push_back(GroupDescriptor::alt(p));
  candidates.push_back(GroupDescriptor::psl2_11());
  candidates.push_back(GroupDescriptor::m11());
  candidates.push_back(GroupDescriptor::m23());
  for (std::uint32_t d : {2u, 3u, 5u, 7u})
    for (std::uint32_t q = 2; q <= 256; ++q) {
      if (prime_power(q).first == 0) continue;
      if (std::gcd(d, q - 1) != 1) continue;
      candidates.push_back(GroupDescriptor::psl(d, q));
    }
  for (const auto& c : candidates)
    if (simple_order(c) == order) return c;
  return std::nullopt;
}

}  // namespace

ShapeReport shape_check(const Factorization& f, std::uint64_t index_bound, std::uint64_t enumeration_bound) {
  ShapeReport report;
  report.hall = f.is_hall();
  const CosetAction action = coset_action(f.G(), f.H(), index_bound);
  const PermGroup& image = action.image;
  report.n_order = action.core.order();
  report.quotient_order = image.order();
  const Permutation k_bar = action.image_of(f.k());
  const PermGroup k_group(image.degree(), {k_bar});
  report.k_bar_order = k_group.order();

  // (1) K/N normal in G/N, complemented by the stabilizer of the coset H, which
  // must act faithfully on it by conjugation.
  report.k_bar_normal = k_group.is_normal_in(image);
  if (report.k_bar_normal) {
    const PermGroup complement = image.stabilizer(0);
    report.complement_order = complement.order();
    bool faithful = true;
    complement.for_each_element([&](const Permutation& x) {
      if (x.is_identity()) return true;
      if (x * k_bar == k_bar * x) faithful = false;
      return faithful;
    });
    report.complement_faithful = faithful;
    if (faithful) {
      report.shape = 1;
      report.detail = "K/N is normal with a faithful complement";
      return report;
    }
  }

  // (2) The last term of the derived series should be T_1 x ... x T_r.
  PermGroup perfect = image;
  while (true) {
    PermGroup next = derived_subgroup(perfect);
    if (next.order() == perfect.order()) break;
    perfect = std::move(next);
  }
  if (perfect.is_trivial()) {
    report.detail = "G/N is solvable and K/N is not normal";
    return report;
  }
  if (perfect.order() > enumeration_bound) {
    report.detail = "perfect core exceeds the enumeration bound";
    return report;
  }

  // Probe elements: the first of each cycle type.
  std::map<std::vector<std::size_t>, Permutation> probes;
  perfect.for_each_element([&](const Permutation& x) {
    if (!x.is_identity()) probes.try_emplace(x.cycle_type(), x);
  });
  std::vector<PermGroup> closures;
  for (const auto& [type, x] : probes) closures.push_back(normal_closure(perfect, {x}));
  std::stable_sort(closures.begin(), closures.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  std::vector<PermGroup> factors;
  for (const auto& c : closures) {
    bool independent = true;
    for (const auto& t : factors)
      if (intersection_order(c, t, enumeration_bound) != 1) {
        independent = false;
        break;
      }
    if (independent) factors.push_back(c);
  }
  BigInt product = 1;
  for (const auto& t : factors) product *= t.order();
  if (product != perfect.order()) {
    report.detail = "perfect core is not a direct product of the probed normal subgroups";
    return report;
  }

  std::vector<SimpleFactorProfile> profiles;
  bool all_simple = true;
  for (const auto& t : factors) {
    SocleFactor factor;
    factor.order = t.order();
    factor.simple = true;
    for (const auto& [type, x] : probes)
      if (t.contains(x) && normal_closure(t, {x}).order() != t.order()) factor.simple = false;
    factor.profile = match_profile(t.order());
    if (factor.simple && factor.profile) profiles.push_back(profile(*factor.profile));
    all_simple = all_simple && factor.simple && factor.profile.has_value();
    report.factors.push_back(std::move(factor));
  }
  if (!all_simple) {
    report.detail = "a socle factor is not simple or matches no known profile";
    return report;
  }
  report.compatible = hyp1_compatible(profiles).ok;
  if (!report.compatible) {
    report.detail = "socle factors violate gcd(|T_i|, e(T_j)) = 1";
    return report;
  }
  report.shape = 2;
  report.detail = std::to_string(factors.size()) + " simple socle factor(s), pairwise compatible";
  return report;
}

}  // namespace hallskew
