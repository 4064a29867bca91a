#include "hallskew/coset.hpp"

#include <numeric>

#include "hallskew/errors.hpp"

namespace hallskew {

RightCosetCanonizer::RightCosetCanonizer(const PermGroup& subgroup) {
  std::vector<Point> all(subgroup.degree());
  std::iota(all.begin(), all.end(), Point{0});
  subgroup_ = subgroup.with_base_prefix(all);
}

Permutation RightCosetCanonizer::canonical(const Permutation& x) const {
  if (x.degree() != subgroup_.degree()) throw InvalidArgument("degree mismatch in coset canonizer");
  Permutation result = x, scratch;
  for (const auto& level : subgroup_.levels_) {
    // (u * x)(b) = x(u(b)) = x(beta): pick the orbit point with the smallest image.
    std::uint32_t best = 0;
    Point best_value = result[level.orbit[0]];
    for (std::uint32_t a = 1; a < level.orbit.size(); ++a) {
      Point v = result[level.orbit[a]];
      if (v < best_value) {
        best_value = v;
        best = a;
      }
    }
    if (best == 0) continue;
    if (!level.transversal.empty()) {
      scratch.assign_product(level.transversal[best], result);
    } else {
      scratch.assign_product(level.representative(best, result.degree()), result);
    }
    std::swap(result, scratch);
  }
  return result;
}

PermGroup homomorphism_kernel(const PermGroup& group, const std::vector<Permutation>& images) {
  const auto& gens = group.generators();
  if (gens.size() != images.size()) throw InvalidArgument("one image per generator required");
  if (gens.empty()) return PermGroup::trivial(group.degree());
  const std::size_t n = group.degree();
  const std::size_t m = images.front().degree();
  std::vector<Permutation> image_gens;
  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].degree() != m) throw InvalidArgument("image degrees differ");
    image_gens.push_back(images[i]);
    std::vector<Point> pts(n + m);
    for (std::size_t x = 0; x < n; ++x) pts[x] = gens[i][static_cast<Point>(x)];
    for (std::size_t x = 0; x < m; ++x) pts[n + x] = static_cast<Point>(n + images[i][static_cast<Point>(x)]);
    combined.push_back(Permutation::from_images_unchecked(std::move(pts)));
  }
  PermGroup image(m, image_gens);
  if (image.order() == group.order()) return PermGroup::trivial(n);
  // Fixing a base of the image pointwise is the same as mapping to the identity.
  std::vector<Point> prefix;
  for (Point b : image.base()) prefix.push_back(static_cast<Point>(n + b));
  PermGroup graph(n + m, combined);
  if (graph.order() != group.order()) throw InvalidArgument("generator images do not define a homomorphism");
  PermGroup kernel = graph.pointwise_stabilizer(prefix);
  std::vector<Permutation> kernel_gens;
  for (const auto& g : kernel.generators()) kernel_gens.push_back(g.restricted(0, n));
  return PermGroup(n, kernel_gens);
}

CosetAction coset_action(const PermGroup& group, const PermGroup& subgroup, std::uint64_t index_bound) {
  if (!subgroup.is_subgroup_of(group)) throw InvalidArgument("H is not a subgroup of G");
  BigInt index = group.order() / subgroup.order();
  if (index > index_bound)
    throw BoundExceeded("index " + index.str() + " exceeds coset bound " + std::to_string(index_bound));
  const auto m = index.convert_to<std::size_t>();

  CosetAction result;
  result.canonizer = RightCosetCanonizer(subgroup);
  const auto& canon = result.canonizer;
  auto& lookup = result.index;
  result.representatives.push_back(canon.canonical(Permutation(group.degree())));
  lookup.emplace(result.representatives.front(), 0);
  const auto& gens = group.generators();
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(m));
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = canon.canonical(result.representatives[i] * gens[s]);
      auto [it, inserted] = lookup.emplace(c, static_cast<Point>(result.representatives.size()));
      if (inserted) result.representatives.push_back(std::move(c));
      images[s][i] = it->second;
    }
  }
  if (result.representatives.size() != m) throw Error("coset enumeration found wrong number of cosets");
  std::vector<Permutation> image_gens;
  for (auto& im : images) image_gens.push_back(Permutation::from_images_unchecked(std::move(im)));
  result.image = PermGroup(m, image_gens);
  result.core = homomorphism_kernel(group, image_gens);
  return result;
}

Permutation CosetAction::image_of(const Permutation& g) const {
  std::vector<Point> images(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    auto it = index.find(canonizer.canonical(representatives[i] * g));
    if (it == index.end()) throw InvalidArgument("element does not act on these cosets");
    images[i] = it->second;
  }
  return Permutation::from_images_unchecked(std::move(images));
}

PermGroup core(const PermGroup& group, const PermGroup& subgroup, std::uint64_t index_bound) {
  return coset_action(group, subgroup, index_bound).core;
}

}  // namespace hallskew
