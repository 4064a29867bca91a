#include "hallskew/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "hallskew/coset.hpp"
#include "hallskew/errors.hpp"
#include "hallskew/factorization.hpp"

namespace hallskew {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
             std::optional<Bipartition> bipartition)
    : n_(vertex_count), parts_(std::move(bipartition)) {
  for (auto& [a, b] : edges) {
    if (a >= n_ || b >= n_) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (parts_) {
    part_of_.assign(n_, {-1, 0});
    for (int side = 0; side < 2; ++side) {
      auto& part = side == 0 ? parts_->first : parts_->second;
      std::sort(part.begin(), part.end());
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i] >= n_) throw InvalidArgument("bipartition vertex out of range");
        if (part_of_[part[i]].first != -1) throw InvalidArgument("bipartition parts overlap");
        part_of_[part[i]] = {side, i};
      }
    }
    for (const auto& [side, _] : part_of_)
      if (side == -1) throw InvalidArgument("bipartition does not cover every vertex");
    for (const auto& [a, b] : edges_)
      if (part_of_[a].first == part_of_[b].first) throw InvalidArgument("edge inside a bipartition part");
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = adjacency_[0].size();
  for (const auto& list : adjacency_)
    if (list.size() != d) return std::nullopt;
  return d;
}

std::pair<int, std::size_t> Graph::part_position(Vertex v) const {
  if (!parts_) throw InvalidArgument("graph has no bipartition");
  return part_of_.at(v);
}

std::string Graph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : edges_) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (parts_) j["bipartition"] = {parts_->first, parts_->second};
  return j.dump();
}

std::string Graph::to_dot(const std::vector<std::string>& labels) const {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < n_; ++v) {
    out << "  " << v;
    if (v < labels.size()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : edges_) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

Graph graph_direct_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(2 * a.edge_count() * b.edge_count());
  for (const auto& [a1, a2] : a.edges())
    for (const auto& [b1, b2] : b.edges()) {
      edges.emplace_back(static_cast<Vertex>(a1 * nb + b1), static_cast<Vertex>(a2 * nb + b2));
      edges.emplace_back(static_cast<Vertex>(a1 * nb + b2), static_cast<Vertex>(a2 * nb + b1));
    }
  return Graph(a.vertex_count() * nb, std::move(edges));
}

Graph graph_bidirect_product(const Graph& a, const Graph& b) {
  if (!a.bipartition() || !b.bipartition()) throw InvalidArgument("bi-direct product needs bipartite graphs");
  const std::size_t ua = a.bipartition()->first.size(), va = a.bipartition()->second.size();
  const std::size_t ub = b.bipartition()->first.size(), vb = b.bipartition()->second.size();
  const std::size_t u_count = ua * ub;
  // (part-0 end, part-1 end) of an edge as part positions
  auto oriented = [](const Graph& g, Vertex x, Vertex y) {
    auto px = g.part_position(x), py = g.part_position(y);
    if (px.first == 1) std::swap(px, py);
    return std::make_pair(px.second, py.second);
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(a.edge_count() * b.edge_count());
  for (const auto& [a1, a2] : a.edges()) {
    const auto [ea_u, ea_v] = oriented(a, a1, a2);
    for (const auto& [b1, b2] : b.edges()) {
      const auto [eb_u, eb_v] = oriented(b, b1, b2);
      edges.emplace_back(static_cast<Vertex>(ea_u * ub + eb_u), static_cast<Vertex>(u_count + ea_v * vb + eb_v));
    }
  }
  Graph::Bipartition parts;
  for (std::size_t i = 0; i < u_count; ++i) parts.first.push_back(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < va * vb; ++i) parts.second.push_back(static_cast<Vertex>(u_count + i));
  return Graph(u_count + va * vb, std::move(edges), std::move(parts));
}

bool is_rotary_pair(const PermGroup& group, const Permutation& rho, const Permutation& z) {
  if (rho.degree() != group.degree() || !group.contains(rho)) throw InvalidArgument("rho is not in G");
  if (z.degree() != group.degree() || !group.contains(z)) throw InvalidArgument("z is not in G");
  if (!z.is_involution()) return false;
  return PermGroup(group.degree(), {rho, z}).order() == group.order();
}

RotaryPair make_rotary_pair(const PermGroup& group, const Permutation& rho, const Permutation& z) {
  if (!is_rotary_pair(group, rho, z)) throw InvalidArgument("(rho, z) is not a rotary pair of G");
  return {group, rho, z, rho.order()};
}

RhoCosets::RhoCosets(const Permutation& rho, const Permutation& z) : z_inverse_(z.inverse()), z_(z) {
  Permutation power(rho.degree());
  do {
    powers_.push_back(power);
    inverse_powers_.push_back(power.inverse());
    power = power * rho;
  } while (!power.is_identity());
}

Permutation RhoCosets::canonical(const Permutation& g) const {
  // (rho^i g)(x) = g(rho^i(x))
  std::size_t best = 0;
  const std::size_t n = g.degree();
  for (std::size_t i = 1; i < powers_.size(); ++i) {
    const auto& a = powers_[i];
    const auto& b = powers_[best];
    for (Point x = 0; x < n; ++x) {
      const Point va = g[a[x]], vb = g[b[x]];
      if (va != vb) {
        if (va < vb) best = i;
        break;
      }
    }
  }
  return powers_[best] * g;
}

bool RhoCosets::in_rho(const Permutation& x) const {
  // rho^i is determined by where it sends the first point rho moves.
  if (powers_.size() == 1) return x.is_identity();
  const auto& rho = powers_[1];
  Point m = 0;
  while (rho[m] == m) ++m;
  for (const auto& power : powers_)
    if (power[m] == x[m] && power == x) return true;
  return false;
}

bool RhoCosets::adjacent(const Permutation& x, const Permutation& y) const {
  const Permutation w = z_inverse_ * (y * x.inverse());
  // rho^a z rho^b = y x^-1  <=>  z^-1 rho^-a (y x^-1) in <rho>; conjugating by z^-1 moves rho^-a across.
  Permutation c;
  for (const auto& inv : inverse_powers_) {
    c = z_inverse_ * inv * z_ * w;
    if (in_rho(c)) return true;
  }
  return false;
}

std::vector<Permutation> RhoCosets::neighbours(const Permutation& g) const {
  std::vector<Permutation> out;
  out.reserve(powers_.size());
  for (const auto& power : powers_) out.push_back(z_ * power * g);
  return out;
}

CosetGraph coset_graph(const RotaryPair& pair, std::uint64_t vertex_bound) {
  const BigInt vertices = pair.G.order() / pair.rho_order;
  if (vertices > vertex_bound)
    throw BoundExceeded("coset graph has " + vertices.str() + " vertices, above the bound " +
                        std::to_string(vertex_bound));
  RhoCosets cosets(pair.rho, pair.z);
  std::unordered_map<Permutation, Vertex, PermutationHash> found;
  std::vector<Permutation> reps{cosets.canonical(Permutation(pair.G.degree()))};
  found.emplace(reps[0], 0);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& s : pair.G.generators()) {
      Permutation c = cosets.canonical(reps[i] * s);
      if (found.emplace(c, static_cast<Vertex>(reps.size())).second) reps.push_back(std::move(c));
    }
  std::sort(reps.begin(), reps.end());
  for (std::size_t i = 0; i < reps.size(); ++i) found[reps[i]] = static_cast<Vertex>(i);

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 0; v < reps.size(); ++v)
    for (const auto& y : cosets.neighbours(reps[v])) {
      const Vertex w = found.at(cosets.canonical(y));
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), w);
    }

  // Two-colour from the coset <rho> itself.
  std::vector<std::vector<Vertex>> adjacency(reps.size());
  for (const auto& [a, b] : edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::vector<int> colour(reps.size(), -1);
  bool bipartite = true;
  for (Vertex start = 0; start < reps.size() && bipartite; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty() && bipartite) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : adjacency[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  std::optional<Graph::Bipartition> parts;
  if (bipartite) {
    parts.emplace();
    for (Vertex v = 0; v < reps.size(); ++v) (colour[v] == 0 ? parts->first : parts->second).push_back(v);
  }
  return {Graph(reps.size(), std::move(edges), std::move(parts)), std::move(reps)};
}

std::string RotationMap::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind == Kind::Rotary ? "rotary" : "birotary";
  j["V"] = V;
  j["E"] = E;
  j["F"] = F;
  j["chi"] = chi;
  if (genus) j["genus"] = *genus;
  j["faceStabilizerOrder"] = face_stabilizer_order;
  return j.dump();
}

RotationMap build_map(const RotaryPair& pair, RotationMap::Kind kind, std::uint64_t dart_bound) {
  if (pair.G.order() > dart_bound)
    throw BoundExceeded("|G| = " + pair.G.order().str() + " darts exceeds the bound " + std::to_string(dart_bound));
  RotationMap m;
  m.kind = kind;
  m.darts = pair.G.order_u64();
  if (kind == RotationMap::Kind::Rotary)
    m.face_stabilizer_order = (pair.rho * pair.z).order();
  else
    m.face_stabilizer_order = PermGroup(pair.G.degree(), {pair.z, conjugate(pair.z, pair.rho)}).order_u64();
  auto classes = [&](std::uint64_t subgroup_order) {
    if (m.darts % subgroup_order != 0) throw Error("subgroup order does not divide |G|");
    return m.darts / subgroup_order;
  };
  m.V = classes(pair.rho_order);
  m.E = classes(2);
  m.F = classes(m.face_stabilizer_order);
  m.chi = static_cast<std::int64_t>(m.V) - static_cast<std::int64_t>(m.E) + static_cast<std::int64_t>(m.F);
  if (kind == RotationMap::Kind::Rotary) {
    if (m.chi % 2 != 0) throw Error("rotary map with odd Euler characteristic");
    m.genus = (2 - m.chi) / 2;
  }
  return m;
}

namespace {

Permutation cycle_1_to(std::uint32_t n) {
  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x) images[x] = (x + 1) % n;
  return Permutation(images);
}

// First element x of `source` (in enumeration order) that is an involution with
// accept(x) true and for which (rho, make(x)) is rotary in G.
template <class Accept, class Make>
std::optional<Permutation> search_involution(const PermGroup& group, const PermGroup& source, const Permutation& rho,
                                             Accept accept, Make make) {
  std::optional<Permutation> found;
  source.for_each_element([&](const Permutation& x) {
    if (!x.is_involution() || !accept(x)) return true;
    Permutation z = make(x);
    if (!z.is_involution()) return true;
    if (PermGroup(group.degree(), {rho, z}).order() != group.order()) return true;
    found = std::move(z);
    return false;
  });
  return found;
}

RotaryPair searched_pair(const PermGroup& group, const Permutation& rho, const std::string& name) {
  auto z = search_involution(group, group, rho, [](const Permutation&) { return true; },
                             [](const Permutation& x) { return x; });
  if (!z) throw Error("no involution z with <rho, z> = " + name);
  return make_rotary_pair(group, rho, *z);
}

RotaryPair sigma_pair(std::uint32_t d, std::uint32_t q0) {
  const PslSigma ps = psl_sigma(d, q0);
  const Permutation rho = singer_cycle(d, q0 * q0);
  const PermGroup k_group(rho.degree(), {rho});
  // x outside N(<rho>), z = x phi
  auto z = search_involution(
      ps.group, ps.subfield, rho, [&](const Permutation& x) { return !k_group.contains(conjugate(rho, x)); },
      [&](const Permutation& x) { return x * ps.phi; });
  if (!z) throw Error("no involution x of PSL(d, q0) with <rho, x phi> = PSigmaL");
  return make_rotary_pair(ps.group, rho, *z);
}

}  // namespace

RotaryPair example_rotary_pair(const GroupDescriptor& desc, bool outer) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::Alt: {
      const std::uint32_t p = desc.a;
      if (!is_prime(p) || p < 5) throw InvalidArgument("alt:p needs p >= 5 prime");
      const Permutation rho = cycle_1_to(p);
      if (outer) return make_rotary_pair(classical_group(GroupDescriptor::sym(p)), rho, Permutation::parse("(1,2)", p));
      return make_rotary_pair(classical_group(desc), rho, Permutation::parse("(1,2)(3,4)", p));
    }
    case Kind::Sym: {
      const std::uint32_t p = desc.a;
      if (!is_prime(p) || p < 5) throw InvalidArgument("sym:p needs p >= 5 prime");
      return make_rotary_pair(classical_group(desc), cycle_1_to(p), Permutation::parse("(1,2)", p));
    }
    case Kind::PSL: {
      if (outer) {
        const auto q0 = static_cast<std::uint32_t>(std::lround(std::sqrt(double(desc.b))));
        if (q0 * q0 != desc.b) throw InvalidArgument("an outer pair for psl:d,q needs q to be a square");
        return sigma_pair(desc.a, q0);
      }
      return searched_pair(psl(desc.a, desc.b), singer_cycle(desc.a, desc.b), desc.to_string());
    }
    case Kind::PSLSigma:
      return sigma_pair(desc.a, desc.b);
    case Kind::PSL2_11:
      return searched_pair(psl2_11().group, psl2_11().order11, desc.to_string());
    case Kind::M11:
    case Kind::M23:
      return searched_pair(mathieu(desc.a), cycle_1_to(desc.a), desc.to_string());
    default:
      break;
  }
  if (outer) throw InvalidArgument(desc.to_string() + " has no outer rotary pair");
  throw InvalidArgument(desc.to_string() + " has no example rotary pair");
}

namespace {

// One factor of a decomposition: its pair, coset graph and coset lookup.
struct Component {
  RotaryPair pair;
  RhoCosets cosets;
  CosetGraph graph;
  std::unordered_map<Permutation, Vertex, PermutationHash> index;
  std::size_t offset = 0;
  std::size_t degree = 0;

  Component(RotaryPair p) : pair(std::move(p)), cosets(pair.rho, pair.z), graph(coset_graph(pair)) {
    for (std::size_t v = 0; v < graph.representatives.size(); ++v)
      index.emplace(graph.representatives[v], static_cast<Vertex>(v));
  }
  Vertex vertex_of(const Permutation& g) const { return index.at(cosets.canonical(g)); }
};

}  // namespace

DecompositionReport verify_decomposition(const std::vector<GroupDescriptor>& factors, std::size_t s,
                                         std::vector<RotaryPair> pairs, const DecompositionOptions& options) {
  const std::size_t r = factors.size();
  if (r == 0) throw InvalidArgument("at least one factor is required");
  if (s > r) throw InvalidArgument("s exceeds the number of factors");
  if (pairs.empty())
    for (std::size_t i = 0; i < r; ++i) pairs.push_back(example_rotary_pair(factors[i], i < s));
  if (pairs.size() != r) throw InvalidArgument("one rotary pair per factor is required");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (std::gcd(pairs[i].rho_order, pairs[j].rho_order) != 1)
        throw HypothesisViolation("|rho_" + std::to_string(i + 1) + "| and |rho_" + std::to_string(j + 1) +
                                  "| are not coprime");

  std::vector<Permutation> involutions;
  for (std::size_t i = 0; i < s; ++i) involutions.push_back(pairs[i].z);
  const Assembled assembled = assemble(factors, s, involutions);
  for (std::size_t i = s; i < r; ++i)
    if (pairs[i].G.order() != assembled.simple[i].order() || !assembled.simple[i].contains(pairs[i].z))
      throw InvalidArgument("pair " + std::to_string(i + 1) + " does not lie in the simple factor");

  std::vector<Component> parts;
  for (std::size_t i = 0; i < r; ++i) {
    parts.emplace_back(pairs[i]);
    parts.back().offset = assembled.offsets[i];
    parts.back().degree = assembled.degrees[i];
    if (i < s && !parts.back().graph.graph.bipartition())
      throw InvalidArgument("coset graph of twisted factor " + std::to_string(i + 1) + " is not bipartite");
  }

  const std::size_t n = assembled.group.degree();
  Permutation rho(n), z(n);
  for (std::size_t i = 0; i < r; ++i) {
    rho = rho * assembled.embed(i, pairs[i].rho);
    z = z * assembled.embed(i, pairs[i].z);
  }
  DecompositionReport report;
  const RotaryPair big = make_rotary_pair(assembled.group, rho, z);
  report.rho_order = big.rho_order;
  report.vertices = to_u64(assembled.group.order() / big.rho_order);
  report.edges = to_u64(assembled.group.order() / 2);

  // Product vertex numbering: bi-direct part (mixed radix within U or V, U block
  // first) for s >= 2, raw vertex index for s <= 1, then direct coordinates.
  std::uint64_t u_block = 1, v_block = 1;
  for (std::size_t i = 0; i < s; ++i) {
    u_block *= parts[i].graph.graph.bipartition()->first.size();
    v_block *= parts[i].graph.graph.bipartition()->second.size();
  }
  report.product_vertices = s >= 2 ? u_block + v_block : parts[0].graph.graph.vertex_count();
  for (std::size_t i = std::max<std::size_t>(s, 1); i < r; ++i)
    report.product_vertices *= parts[i].graph.graph.vertex_count();

  // Tuple of component vertices -> product vertex, or nullopt for a mixed-part tuple.
  auto product_index = [&](const std::vector<Vertex>& c) -> std::optional<std::uint64_t> {
    std::uint64_t idx = 0;
    std::size_t next = 0;
    if (s >= 2) {
      const int side = parts[0].graph.graph.part_position(c[0]).first;
      for (std::size_t i = 0; i < s; ++i) {
        const auto [si, pos] = parts[i].graph.graph.part_position(c[i]);
        if (si != side) return std::nullopt;
        const auto& bp = *parts[i].graph.graph.bipartition();
        idx = idx * (side == 0 ? bp.first.size() : bp.second.size()) + pos;
      }
      if (side == 1) idx += u_block;
      next = s;
    } else {
      idx = c[0];
      next = 1;
    }
    for (std::size_t i = next; i < r; ++i) idx = idx * parts[i].graph.graph.vertex_count() + c[i];
    return idx;
  };
  auto phi = [&](const Permutation& g) {
    std::vector<Vertex> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = parts[i].vertex_of(g.restricted(parts[i].offset, parts[i].degree));
    return c;
  };
  auto fail = [&](std::string why) {
    report.ok = false;
    if (report.failure.empty()) report.failure = std::move(why);
  };

  if (report.vertices != report.product_vertices) fail("vertex counts differ");

  report.sampled = !options.full && report.edges > options.full_edge_limit;
  if (!report.sampled) {
    const CosetGraph whole = coset_graph(big, std::numeric_limits<std::uint64_t>::max());
    Graph product = parts[0].graph.graph;
    for (std::size_t i = 1; i < s; ++i) product = graph_bidirect_product(product, parts[i].graph.graph);
    for (std::size_t i = std::max<std::size_t>(s, 1); i < r; ++i)
      product = graph_direct_product(product, parts[i].graph.graph);
    report.edges = whole.graph.edge_count();
    report.product_edges = product.edge_count();
    if (product.vertex_count() != whole.graph.vertex_count()) fail("vertex counts differ");

    std::vector<Vertex> map(whole.graph.vertex_count());
    std::vector<std::int64_t> inverse(product.vertex_count(), -1);
    for (std::size_t v = 0; v < map.size() && report.ok; ++v) {
      const auto idx = product_index(phi(whole.representatives[v]));
      if (!idx || *idx >= inverse.size()) {
        fail("vertex " + std::to_string(v) + " maps outside the product");
        break;
      }
      if (inverse[*idx] != -1) {
        fail("vertices " + std::to_string(inverse[*idx]) + " and " + std::to_string(v) + " have the same image");
        break;
      }
      map[v] = static_cast<Vertex>(*idx);
      inverse[*idx] = static_cast<std::int64_t>(v);
    }
    if (!report.ok) return report;
    for (const auto& [a, b] : whole.graph.edges()) {
      ++report.checked;
      if (!product.adjacent(map[a], map[b])) {
        fail("edge {" + std::to_string(a) + ", " + std::to_string(b) + "} is not preserved");
        return report;
      }
    }
    for (const auto& [a, b] : product.edges()) {
      ++report.checked;
      if (!whole.graph.adjacent(static_cast<Vertex>(inverse[a]), static_cast<Vertex>(inverse[b]))) {
        fail("product edge {" + std::to_string(a) + ", " + std::to_string(b) + "} has no preimage edge");
        return report;
      }
    }
    return report;
  }

  // Sampled: random cosets, a third paired uniformly, a third with a neighbour
  // in the big graph, a third with the preimage of a neighbour in the product.
  const RhoCosets cosets(rho, z);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick_element(0, assembled.group.order_u64() - 1);
  std::uniform_int_distribution<std::uint64_t> pick_power(0, big.rho_order - 1);
  std::vector<Permutation> rho_powers{Permutation(n)};
  for (std::uint64_t i = 1; i < big.rho_order; ++i) rho_powers.push_back(rho_powers.back() * rho);
  auto pull_back = [&](const std::vector<Vertex>& c) {
    Permutation g(n);
    for (std::size_t i = 0; i < r; ++i) g = g * assembled.embed(i, parts[i].graph.representatives[c[i]]);
    return g;
  };
  for (std::uint64_t k = 0; k < options.samples; ++k) {
    const Permutation x = assembled.group.unrank(pick_element(rng));
    const auto cx = phi(x);
    Permutation y;
    switch (k % 3) {
      case 0:
        y = assembled.group.unrank(pick_element(rng));
        break;
      case 1:
        y = z * rho_powers[pick_power(rng)] * x;
        break;
      default: {
        std::vector<Vertex> cy(r);
        for (std::size_t i = 0; i < r; ++i) {
          const auto& nb = parts[i].graph.graph.neighbors(cx[i]);
          cy[i] = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
        }
        y = pull_back(cy);
      }
    }
    const auto cy = phi(y);
    ++report.checked;
    if (!product_index(cx) || !product_index(cy)) {
      fail("sampled coset maps outside the product");
      break;
    }
    // the coset is recovered from its image
    if (cosets.canonical(pull_back(cx)) != cosets.canonical(x)) {
      fail("coordinate map is not injective on a sampled coset");
      break;
    }
    bool product_adjacent = true;
    for (std::size_t i = 0; i < r && product_adjacent; ++i)
      product_adjacent = parts[i].graph.graph.adjacent(cx[i], cy[i]);
    if (product_adjacent != cosets.adjacent(x, y)) {
      fail("adjacency differs for sampled pair " + std::to_string(k));
      break;
    }
  }
  return report;
}

HallCayleyCertificate hall_cayley_certificate(const PermGroup& group, const PermGroup& subgroup,
                                              const Permutation& rho) {
  HallCayleyCertificate c;
  try {
    // G = H <rho> exactly means H is regular on the cosets of <rho>.
    certify_factorization(group, subgroup, rho);
    c.regular = true;
  } catch (const NotAFactorization&) {
    c.regular = false;
  }
  c.hall = subgroup.is_subgroup_of(group) && is_hall_subgroup(group, subgroup);
  c.core_free = c.regular && core(group, subgroup).is_trivial();
  return c;
}

SocleCheck socle_check(const PermGroup& group, const Permutation& rho) {
  PermGroup perfect = group;
  while (true) {
    PermGroup next = derived_subgroup(perfect);
    if (next.order() == perfect.order()) break;
    perfect = std::move(next);
  }
  SocleCheck c;
  c.socle_order = perfect.order();
  c.rho_in_socle = perfect.contains(rho);
  const BigInt index = group.order() / perfect.order();
  c.index_at_most_2 = !perfect.is_trivial() && (index == 1 || index == 2);
  return c;
}

}  // namespace hallskew
