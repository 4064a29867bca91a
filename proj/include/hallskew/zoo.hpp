#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hallskew/field.hpp"
#include "hallskew/perm_group.hpp"

namespace hallskew {

/// Names a group of the zoo. Grammar:
///   alt:n  sym:n  psl:d,q  psigma:d,q0  psl2_11  m11  m23  cyclic:n
///   dihedral:n (order n, acting on n/2 points; "d8" is short for dihedral:8)
///   wreath:p (Z_p wr S_2 on 2p points)
struct GroupDescriptor {
  enum class Kind { Alt, Sym, PSL, PSLSigma, PSL2_11, M11, M23, Cyclic, Dihedral, Wreath };

  Kind kind = Kind::Sym;
  std::uint32_t a = 0;  // n, p, d
  std::uint32_t b = 0;  // q or q0 for the linear kinds

  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;

  static GroupDescriptor alt(std::uint32_t n) { return {Kind::Alt, n, 0}; }
  static GroupDescriptor sym(std::uint32_t n) { return {Kind::Sym, n, 0}; }
  static GroupDescriptor psl(std::uint32_t d, std::uint32_t q) { return {Kind::PSL, d, q}; }
  static GroupDescriptor psigma(std::uint32_t d, std::uint32_t q0) { return {Kind::PSLSigma, d, q0}; }
  static GroupDescriptor psl2_11() { return {Kind::PSL2_11, 2, 11}; }
  static GroupDescriptor m11() { return {Kind::M11, 11, 0}; }
  static GroupDescriptor m23() { return {Kind::M23, 23, 0}; }
  static GroupDescriptor cyclic(std::uint32_t n) { return {Kind::Cyclic, n, 0}; }
  static GroupDescriptor dihedral(std::uint32_t n) { return {Kind::Dihedral, n, 0}; }
  static GroupDescriptor wreath(std::uint32_t p) { return {Kind::Wreath, p, 0}; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

using Matrix = std::vector<std::vector<Field::Element>>;

/// Points of PG(d-1, q): nonzero row vectors scaled so the first nonzero
/// coordinate is 1, numbered in lexicographic order of their coordinates.
class ProjectiveSpace {
 public:
  ProjectiveSpace(std::uint32_t d, std::uint32_t q);

  const Field& field() const noexcept { return *field_; }
  std::uint32_t dimension() const noexcept { return d_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Field::Element>& point(std::size_t i) const { return points_[i]; }
  Point index_of(std::vector<Field::Element> v) const;  // normalizes v first

  // v -> vA on points.
  Permutation action(const Matrix& a) const;
  // Coordinatewise x -> x^(p^e).
  Permutation frobenius(std::uint32_t e) const;

  Matrix identity() const;
  Matrix elementary(std::uint32_t i, std::uint32_t j, Field::Element lambda) const;  // I + lambda E_ij
  // Companion matrix of the lex-least primitive polynomial of degree d over GF(q).
  Matrix singer_matrix() const;

 private:
  std::shared_ptr<const Field> field_;
  std::uint32_t d_;
  std::vector<std::vector<Field::Element>> points_;
  std::vector<std::uint32_t> lookup_;  // vector code -> point index
  std::uint64_t code(const std::vector<Field::Element>& v) const;
};

// d prime, q a prime power, gcd(d, q-1) = 1; throws HypothesisViolation otherwise.
void check_linear_hypothesis(std::uint32_t d, std::uint64_t q);

// |PSL(d,q)| = q^(d(d-1)/2) prod_{j=2..d} (q^j - 1) / gcd(d, q-1)
BigInt psl_order(std::uint32_t d, std::uint64_t q);

// Natural actions: Alt/Sym on n points, cyclic on n, dihedral of order n on n/2,
// Z_p wr S_2 on 2p.
PermGroup classical_group(const GroupDescriptor& desc);

PermGroup psl(std::uint32_t d, std::uint32_t q);
Permutation singer_cycle(std::uint32_t d, std::uint32_t q);
PermGroup point_stabilizer(const PermGroup& group, Point point);

struct PslSigma {
  PermGroup group;     // PSL(d, q0^2):<phi>
  Permutation phi;     // x -> x^q0 on coordinates
  PermGroup socle;     // PSL(d, q0^2)
  PermGroup subfield;  // PSL(d, q0) on the same points
};
PslSigma psl_sigma(std::uint32_t d, std::uint32_t q0);

PermGroup mathieu(std::uint32_t n);

struct Psl211 {
  PermGroup group;      // on the 11 cosets of an A5
  Permutation order11;  // image of the transvection I + E_12
};
// PSL(2,11) on 11 points, from its action on the cosets of the first A5 found
// by scanning (involution, order-3) pairs in lexicographic element order.
const Psl211& psl2_11();

// Any descriptor; linear kinds enforce the standing hypothesis.
PermGroup make_group(const GroupDescriptor& desc);

// The simple group T behind a Table 1 descriptor (the socle for psigma).
PermGroup simple_factor(const GroupDescriptor& desc);

struct Assembled {
  PermGroup group;
  std::vector<GroupDescriptor> factors;
  std::vector<PermGroup> simple;       // T_i on its own points
  std::vector<std::size_t> offsets;    // T_i acts on [offsets[i], offsets[i] + degree_i)
  std::vector<std::size_t> degrees;
  std::size_t twisted = 0;             // s
  Permutation diagonal;                // z_1 ... z_s on the full domain (identity when s = 0)

  Permutation embed(std::size_t i, const Permutation& x) const { return x.embedded(group.degree(), offsets[i]); }
};

// ((T_1 x ... x T_s):<z_1...z_s>) x T_{s+1} x ... x T_r on the disjoint union of
// the factors' domains. involutions[i] acts on T_i's own points for i < s and
// must be an order-2 element outside T_i normalizing it.
Assembled assemble(const std::vector<GroupDescriptor>& factors, std::size_t s,
                   const std::vector<Permutation>& involutions);

/// A row of Table 1 realized concretely: T = HK with H a point stabilizer
/// and K = <k> cyclic of order e(T).
struct Table1Triple {
  GroupDescriptor desc;
  PermGroup G;
  PermGroup H;
  Permutation k;
};
Table1Triple table1_triple(const GroupDescriptor& desc);

// The desk-scale rows: Alt/Sym for p in {5,7,11,13}, PSL(2,11), M11, M23,
// PSL(3,2), PSL(3,3), PSL(2,4), PSL(2,8), PSL(2,16), PSigmaL(2,4), PSigmaL(2,16).
std::vector<GroupDescriptor> table1_catalog();

}  // namespace hallskew
