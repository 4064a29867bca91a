#include "hallskew/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "hallskew/errors.hpp"

namespace hallskew {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw InvalidArgument("cycle point out of range");
      if (used[x]) throw InvalidArgument("cycles are not disjoint");
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

namespace {

std::vector<Point> parse_cycle_body(std::string_view body) {
  std::vector<Point> points;
  bool separated = body.find_first_of(", \t") != std::string_view::npos;
  if (!separated) {
    // compact form: one digit per point
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidArgument("bad character in cycle: '" + std::string(1, c) + "'");
      points.push_back(static_cast<Point>(c - '0'));
    }
    return points;
  }
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))))
      ++i;
    if (i >= body.size()) break;
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw InvalidArgument("bad character in cycle: '" + std::string(1, body[i]) + "'");
    std::uint64_t value = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(body[i] - '0');
      if (value > std::numeric_limits<Point>::max()) throw InvalidArgument("point too large");
      ++i;
    }
    points.push_back(static_cast<Point>(value));
  }
  return points;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  Point largest = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw InvalidArgument("expected '(' in permutation \"" + std::string(text) + "\"");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw InvalidArgument("unterminated cycle in \"" + std::string(text) + "\"");
    auto points = parse_cycle_body(text.substr(i + 1, close - i - 1));
    for (Point& x : points) {
      if (x == 0) throw InvalidArgument("points are 1-based; got 0");
      largest = std::max(largest, x);
      --x;
    }
    if (points.size() > 1) cycles.push_back(std::move(points));
    i = close + 1;
  }
  if (degree == 0) degree = largest;
  if (largest > degree) throw InvalidArgument("point exceeds degree " + std::to_string(degree));
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  // Walk each cycle once: x -> x^(p^e) is a shift by e along its cycle.
  Permutation result(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<Point> cycle;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    auto len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = ((exponent % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j)
      result.images_[cycle[j]] = cycle[(j + shift) % len];
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    std::uint64_t g = std::gcd(result, len);
    std::uint64_t factor = len / g;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      throw BoundExceeded("element order exceeds 64 bits");
    result *= factor;
  }
  return result;
}

bool Permutation::is_involution() const noexcept {
  bool moved = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
    moved = moved || images_[i] != i;
  }
  return moved;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> result;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) result.push_back(static_cast<Point>(i));
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

void Permutation::assign_product(const Permutation& p, const Permutation& q) {
  images_.resize(p.degree());
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] = q.images_[p.images_[i]];
}

Permutation Permutation::extended(std::size_t degree) const { return embedded(degree, 0); }

Permutation Permutation::embedded(std::size_t degree, std::size_t offset) const {
  if (offset + this->degree() > degree) throw InvalidArgument("embedding does not fit");
  Permutation result(degree);
  for (std::size_t i = 0; i < this->degree(); ++i)
    result.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return result;
}

Permutation Permutation::restricted(std::size_t offset, std::size_t count) const {
  if (offset + count > degree()) throw InvalidArgument("restriction out of range");
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point y = images_[offset + i];
    if (y < offset || y >= offset + count) throw InvalidArgument("block is not invariant");
    images[i] = static_cast<Point>(y - offset);
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  std::vector<Point> out;
  compose_into(p, q, out);
  return Permutation::from_images_unchecked(std::move(out));
}

void compose_into(const Permutation& p, const Permutation& q, std::vector<Point>& out) {
  auto pi = p.images();
  auto qi = q.images();
  out.resize(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = qi[pi[i]];
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // (g^-1 x g) maps g(i) -> g(x(i))
  std::vector<Point> images(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) images[g[static_cast<Point>(i)]] = g[x[static_cast<Point>(i)]];
  return Permutation::from_images_unchecked(std::move(images));
}

std::uint64_t hash_images(std::span<const Point> images) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hallskew
