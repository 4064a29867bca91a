#include "hallskew/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "hallskew/errors.hpp"

namespace hallskew {

namespace {

// Explicit transversals cost degree * |orbit| points per level.
constexpr std::size_t kExplicitTransversalLimit = std::size_t{1} << 22;

Point smallest_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[static_cast<Point>(i)] != i) return static_cast<Point>(i);
  return static_cast<Point>(g.degree());
}

void check_degree(const Permutation& g, std::size_t degree) {
  if (g.degree() != degree)
    throw InvalidArgument("degree mismatch: permutation on " + std::to_string(g.degree()) +
                          " points, group on " + std::to_string(degree));
}

}  // namespace

namespace detail {

void ChainLevel::recompute(std::size_t degree) {
  inverse_generators.clear();
  for (const auto& s : generators) inverse_generators.push_back(s.inverse());

  orbit.assign(1, base_point);
  position.assign(degree, kNone);
  position[base_point] = 0;
  parent_label.assign(1, kNone);
  parent.assign(1, kNone);
  for (std::size_t a = 0; a < orbit.size(); ++a) {
    Point beta = orbit[a];
    for (std::uint32_t s = 0; s < generators.size(); ++s) {
      Point gamma = generators[s][beta];
      if (position[gamma] != kNone) continue;
      position[gamma] = static_cast<std::uint32_t>(orbit.size());
      orbit.push_back(gamma);
      parent_label.push_back(s);
      parent.push_back(static_cast<std::uint32_t>(a));
    }
  }

  transversal.clear();
  inverse_transversal.clear();
  if (degree * orbit.size() > kExplicitTransversalLimit) return;
  transversal.reserve(orbit.size());
  inverse_transversal.reserve(orbit.size());
  transversal.emplace_back(degree);
  inverse_transversal.emplace_back(degree);
  for (std::size_t a = 1; a < orbit.size(); ++a) {
    // u_a = u_parent * s, so u_a^-1 = s^-1 * u_parent^-1
    transversal.push_back(transversal[parent[a]] * generators[parent_label[a]]);
    inverse_transversal.push_back(inverse_generators[parent_label[a]] * inverse_transversal[parent[a]]);
  }
}

Permutation ChainLevel::representative(std::uint32_t index, std::size_t degree) const {
  if (!transversal.empty()) return transversal[index];
  std::vector<std::uint32_t> labels;
  for (std::uint32_t a = index; a != 0; a = parent[a]) labels.push_back(parent_label[a]);
  Permutation u(degree);
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) u.assign_product(Permutation(u), generators[*it]);
  return u;
}

void ChainLevel::strip(Permutation& g, std::uint32_t index, Permutation& scratch) const {
  if (!inverse_transversal.empty()) {
    scratch.assign_product(g, inverse_transversal[index]);
    std::swap(g, scratch);
    return;
  }
  for (std::uint32_t a = index; a != 0; a = parent[a]) {
    scratch.assign_product(g, inverse_generators[parent_label[a]]);
    std::swap(g, scratch);
  }
}

}  // namespace detail

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) check_degree(g, degree_);
  for (Point b : base_prefix)
    if (b >= degree_) throw InvalidArgument("base point out of range");
  build(base_prefix);
  // Trivial levels carry no information once the chain is complete.
  std::erase_if(levels_, [](const detail::ChainLevel& l) { return l.orbit.size() == 1; });
  order_ = 1;
  for (const auto& l : levels_) order_ *= l.orbit.size();
}

PermGroup PermGroup::from_levels(std::size_t degree, std::vector<detail::ChainLevel> levels) {
  PermGroup g;
  g.degree_ = degree;
  g.levels_ = std::move(levels);
  std::erase_if(g.levels_, [](const detail::ChainLevel& l) { return l.orbit.size() == 1; });
  if (!g.levels_.empty()) g.generators_ = g.levels_.front().generators;
  for (const auto& l : g.levels_) g.order_ *= l.orbit.size();
  return g;
}

void PermGroup::add_level(Point base_point) {
  detail::ChainLevel level;
  level.base_point = base_point;
  level.recompute(degree_);
  levels_.push_back(std::move(level));
}

void PermGroup::build(std::span<const Point> prefix) {
  levels_.clear();
  std::vector<bool> in_base(degree_, false);
  for (Point b : prefix) {
    if (in_base[b]) continue;
    in_base[b] = true;
    add_level(b);
  }
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const auto& l) { return g[l.base_point] == l.base_point; });
    if (fixes_base) {
      Point b = smallest_moved_point(g);
      in_base[b] = true;
      add_level(b);
    }
  }
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    for (auto& level : levels_) {
      level.generators.push_back(g);
      if (g[level.base_point] != level.base_point) break;
    }
  }
  for (auto& level : levels_) level.recompute(degree_);
  schreier_sims();
}

std::size_t PermGroup::strip(Permutation& g, std::size_t start, Permutation& scratch) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    std::uint32_t index = level.index_of(g[level.base_point]);
    if (index == detail::ChainLevel::kNone) return l;
    level.strip(g, index, scratch);
  }
  return levels_.size();
}

void PermGroup::schreier_sims() {
  Permutation h, scratch;
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t a = 0; a < levels_[li].orbit.size() && !extended; ++a) {
      for (std::uint32_t s = 0; s < levels_[li].generators.size(); ++s) {
        const auto& level = levels_[li];
        Point gamma = level.generators[s][level.orbit[a]];
        std::uint32_t c = level.index_of(gamma);
        if (level.parent[c] == a && level.parent_label[c] == s) continue;  // tree edge
        // u_a * s * u_c^-1
        h = level.representative(static_cast<std::uint32_t>(a), degree_) * level.generators[s];
        level.strip(h, c, scratch);
        std::size_t j = strip(h, li + 1, scratch);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) add_level(smallest_moved_point(h));
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          levels_[l].recompute(degree_);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> result;
  for (const auto& l : levels_) result.push_back(l.base_point);
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  check_degree(g, degree_);
  Permutation h = g, scratch;
  return strip(h, 0, scratch) == levels_.size() && h.is_identity();
}

std::uint64_t PermGroup::rank(const Permutation& g) const {
  check_degree(g, degree_);
  Permutation h = g, scratch;
  std::uint64_t r = 0;
  for (const auto& level : levels_) {
    std::uint32_t index = level.index_of(h[level.base_point]);
    if (index == detail::ChainLevel::kNone) throw InvalidArgument("element not in group");
    r = r * level.orbit.size() + index;
    level.strip(h, index, scratch);
  }
  if (!h.is_identity()) throw InvalidArgument("element not in group");
  return r;
}

std::uint64_t PermGroup::rank_member(std::span<const Point> images) const {
  for (const auto& level : levels_)
    if (level.inverse_transversal.empty())
      return rank(Permutation::from_images_unchecked({images.begin(), images.end()}));
  std::uint32_t digits[64];
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    // The residue after stripping levels 0..l-1 sends b_l to u_{l-1}^-1(...u_0^-1(g(b_l))).
    Point x = images[levels_[l].base_point];
    for (std::size_t i = 0; i < l; ++i) x = levels_[i].inverse_transversal[digits[i]][x];
    digits[l] = levels_[l].index_of(x);
    r = r * levels_[l].orbit.size() + digits[l];
  }
  return r;
}

Permutation PermGroup::unrank(std::uint64_t r) const {
  if (r >= order_) throw InvalidArgument("rank out of range");
  std::vector<std::uint32_t> digits(levels_.size());
  for (std::size_t l = levels_.size(); l-- > 0;) {
    digits[l] = static_cast<std::uint32_t>(r % levels_[l].orbit.size());
    r /= levels_[l].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t l = 0; l < levels_.size(); ++l)
    g = levels_[l].representative(digits[l], degree_) * g;
  return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const {
  if (order_ > bound)
    throw BoundExceeded("group order " + order_.str() + " exceeds enumeration bound " +
                        std::to_string(bound));
  std::vector<Permutation> out;
  out.reserve(order_.convert_to<std::size_t>());
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw InvalidArgument("point out of range");
  std::vector<Point> result{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t a = 0; a < result.size(); ++a)
    for (const auto& g : generators_) {
      Point y = g[result[a]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  return result;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbit(0).size() == degree_; }

PermGroup PermGroup::stabilizer(Point x) const {
  Point pts[] = {x};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  for (Point p : points)
    if (p >= degree_) throw InvalidArgument("point out of range");
  PermGroup rebased;
  rebased.degree_ = degree_;
  rebased.generators_ = generators_;
  rebased.build(points);
  // The first |distinct points| levels are the prefix; what follows is the stabilizer chain.
  std::vector<bool> seen(degree_, false);
  std::size_t prefix = 0;
  for (Point p : points)
    if (!seen[p]) {
      seen[p] = true;
      ++prefix;
    }
  std::vector<detail::ChainLevel> tail(std::make_move_iterator(rebased.levels_.begin() + static_cast<std::ptrdiff_t>(prefix)),
                                       std::make_move_iterator(rebased.levels_.end()));
  return from_levels(degree_, std::move(tail));
}

PermGroup PermGroup::with_base_prefix(std::span<const Point> prefix) const {
  return PermGroup(degree_, generators_, prefix);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& g : other.generators())
    for (const auto& h : generators_)
      if (!contains(conjugate(h, g))) return false;
  return true;
}

PermGroup group_from_generators(std::vector<Permutation> generators) {
  if (generators.empty()) throw InvalidArgument("empty generator set");
  std::size_t degree = generators.front().degree();
  return PermGroup(degree, std::move(generators));
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  PermGroup closure(group.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : group.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (closure.contains(c)) continue;
      gens.push_back(std::move(c));
      closure = PermGroup(group.degree(), gens);
    }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
  const auto& gens = group.generators();
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(group, commutators);
}

BigInt count_involutions(const PermGroup& group, std::uint64_t bound) {
  if (group.order() > bound)
    throw BoundExceeded("group order " + group.order().str() + " exceeds enumeration bound");
  std::uint64_t count = 0;
  group.for_each_element([&](const Permutation& g) {
    if (g.is_involution()) ++count;
  });
  return count;
}

BigInt intersection_order(const PermGroup& a, const PermGroup& b, std::uint64_t bound) {
  if (a.degree() != b.degree()) throw InvalidArgument("groups act on different degrees");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  if (small.order() > bound)
    throw BoundExceeded("group order " + small.order().str() + " exceeds enumeration bound");
  std::uint64_t count = 0;
  small.for_each_element([&](const Permutation& g) {
    if (large.contains(g)) ++count;
  });
  return count;
}

bool is_hall_subgroup(const PermGroup& group, const PermGroup& subgroup) {
  if (!subgroup.is_subgroup_of(group)) throw InvalidArgument("not a subgroup");
  return gcd(subgroup.order(), group.order() / subgroup.order()) == 1;
}

}  // namespace hallskew
