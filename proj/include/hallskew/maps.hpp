#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallskew/perm_group.hpp"
#include "hallskew/zoo.hpp"

namespace hallskew {

inline constexpr std::uint64_t kDefaultVertexBound = 1'000'000;
inline constexpr std::uint64_t kDefaultDartBound = 10'000'000;
inline constexpr std::uint64_t kFullCheckEdgeLimit = 1'000'000;
inline constexpr std::uint64_t kSampledPairs = 100'000;

using Vertex = std::uint32_t;

/// A simple undirected graph. Edges are stored once as (i, j) with i < j, sorted.
class Graph {
 public:
  using Bipartition = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

  Graph() = default;
  // Rejects loops and, if a bipartition is given, edges inside a part or
  // vertices missing from both parts. Duplicate edges are merged.
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
        std::optional<Bipartition> bipartition = std::nullopt);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  const std::optional<Bipartition>& bipartition() const noexcept { return parts_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const;
  // Common degree, or nullopt when the graph is not regular.
  std::optional<std::size_t> regular_degree() const;

  // Part of v (0 or 1) and its position in that part's sorted list. Needs a bipartition.
  std::pair<int, std::size_t> part_position(Vertex v) const;

  std::string to_json() const;
  // labels[i] names vertex i; empty means plain indices.
  std::string to_dot(const std::vector<std::string>& labels = {}) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // sorted
  std::optional<Bipartition> parts_;
  std::vector<std::pair<int, std::size_t>> part_of_;
};

// Vertices (a, b) numbered a * |B| + b; adjacent iff adjacent in both coordinates.
Graph graph_direct_product(const Graph& a, const Graph& b);
// Parts U1 x U2 (numbered first, row-major) and V1 x V2; (u1,u2) ~ (v1,v2) iff
// u1 ~ v1 and u2 ~ v2. Both inputs need a bipartition.
Graph graph_bidirect_product(const Graph& a, const Graph& b);

/// (rho, z) with z an involution and <rho, z> = G.
struct RotaryPair {
  PermGroup G;
  Permutation rho;
  Permutation z;
  std::uint64_t rho_order = 0;
};

// Throws InvalidArgument if rho or z is not in G.
bool is_rotary_pair(const PermGroup& group, const Permutation& rho, const Permutation& z);
// Validating constructor; throws InvalidArgument when the pair is not rotary.
RotaryPair make_rotary_pair(const PermGroup& group, const Permutation& rho, const Permutation& z);

/// Right cosets <rho> g, each named by its lexicographically least element.
class RhoCosets {
 public:
  RhoCosets(const Permutation& rho, const Permutation& z);

  std::uint64_t rho_order() const noexcept { return powers_.size(); }
  Permutation canonical(const Permutation& g) const;
  bool in_rho(const Permutation& x) const;
  // y x^-1 in <rho> z <rho>, i.e. the cosets of x and y are adjacent.
  bool adjacent(const Permutation& x, const Permutation& y) const;
  // Representatives of the neighbours of <rho> g: <rho> z rho^i g.
  std::vector<Permutation> neighbours(const Permutation& g) const;

 private:
  std::vector<Permutation> powers_;  // rho^i
  std::vector<Permutation> inverse_powers_;
  Permutation z_inverse_;
  Permutation z_;
};

struct CosetGraph {
  Graph graph;
  std::vector<Permutation> representatives;  // vertex -> canonical coset representative
};

// Cos(G, <rho>, <rho> z <rho>), with vertices numbered in lexicographic order of
// their representatives. A bipartition is attached when the graph is bipartite;
// the part holding <rho> comes first.
CosetGraph coset_graph(const RotaryPair& pair, std::uint64_t vertex_bound = kDefaultVertexBound);

struct RotationMap {
  enum class Kind { Rotary, Birotary };
  Kind kind = Kind::Rotary;
  std::uint64_t darts = 0;
  std::uint64_t V = 0, E = 0, F = 0;
  std::uint64_t face_stabilizer_order = 0;
  std::int64_t chi = 0;
  std::optional<std::int64_t> genus;  // rotary maps only

  std::string to_json() const;
};

// Vertices, edges and faces are the right cosets of <rho>, <z> and the face
// stabilizer (<rho z> or <z, z^rho>) on the darts G.
RotationMap build_map(const RotaryPair& pair, RotationMap::Kind kind, std::uint64_t dart_bound = kDefaultDartBound);

// The explicit pairs of the examples: Alt(p) with (1..p), (12)(34), or (12)
// when outer; Sym(p) with (12); PSL(2,11), M11, M23 and PSL(d,q) with an
// element of order e(T) and the first generating involution; PSL(d,q0^2):<phi>
// with z = x phi for x the first suitable involution of PSL(d,q0). outer = true
// is accepted for alt:p and psl:d,q with q a square; sym and psigma are always outer.
RotaryPair example_rotary_pair(const GroupDescriptor& desc, bool outer = false);

struct DecompositionReport {
  bool ok = true;
  bool sampled = false;
  std::uint64_t vertices = 0;       // of the big coset graph
  std::uint64_t edges = 0;
  std::uint64_t product_vertices = 0;
  std::uint64_t product_edges = 0;
  std::uint64_t checked = 0;        // edges (full) or vertex pairs (sampled)
  std::uint64_t rho_order = 0;
  std::string failure;
};

struct DecompositionOptions {
  bool full = false;  // force the full check regardless of size
  std::uint64_t full_edge_limit = kFullCheckEdgeLimit;
  std::uint64_t samples = kSampledPairs;
  std::uint64_t seed = 0x5eed;
};

// Builds G from the factors (the first s twisted by their outer involutions),
// rho = (rho_1, ..., rho_r) and z = (z_1, ..., z_r), and checks that
// <rho>(g_1, ..., g_r) -> (<rho_1> g_1, ..., <rho_r> g_r) is an isomorphism from
// Cos(G, <rho>, <rho> z <rho>) onto (G_1 x_bi ... x_bi G_s) x G_{s+1} x ... x G_r.
// Empty pairs means example_rotary_pair for each factor. Throws
// HypothesisViolation when the rho_i orders are not pairwise coprime.
DecompositionReport verify_decomposition(const std::vector<GroupDescriptor>& factors, std::size_t s,
                                         std::vector<RotaryPair> pairs = {},
                                         const DecompositionOptions& options = {});

struct HallCayleyCertificate {
  bool regular = false;    // H is regular on the vertices of the coset graph
  bool hall = false;
  bool core_free = false;
  bool ok() const noexcept { return regular && hall && core_free; }
};
HallCayleyCertificate hall_cayley_certificate(const PermGroup& group, const PermGroup& subgroup,
                                              const Permutation& rho);

struct SocleCheck {
  BigInt socle_order;     // last term of the derived series
  bool rho_in_socle = false;
  bool index_at_most_2 = false;
  bool ok() const noexcept { return rho_in_socle && index_at_most_2; }
};
// <rho> lies in the socle and the socle has index at most 2.
SocleCheck socle_check(const PermGroup& group, const Permutation& rho);

}  // namespace hallskew
