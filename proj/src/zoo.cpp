#include "hallskew/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "hallskew/coset.hpp"
#include "hallskew/errors.hpp"

namespace hallskew {

namespace {

std::uint32_t parse_number(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(std::string_view text, std::string_view what) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw InvalidArgument(std::string(what) + " needs two parameters, e.g. psl:3,2");
  return {parse_number(text.substr(0, comma), what), parse_number(text.substr(comma + 1), what)};
}

Permutation cycle_of(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> c(length);
  std::iota(c.begin(), c.end(), static_cast<Point>(first));
  return Permutation::from_cycles(degree, {c});
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string_view args = colon == std::string::npos ? std::string_view{} : std::string_view(text).substr(colon + 1);

  GroupDescriptor d;
  if (colon == std::string::npos) {
    if (head == "m11") return m11();
    if (head == "m23") return m23();
    if (head == "psl2_11" || head == "psl2-11") return psl2_11();
    if (head.size() > 1 && head[0] == 'd' && std::isdigit(static_cast<unsigned char>(head[1])))
      d = dihedral(parse_number(std::string_view(head).substr(1), "dihedral order"));
    else
      throw InvalidArgument("unknown group descriptor '" + std::string(raw) + "'");
  } else if (head == "alt") {
    d = alt(parse_number(args, "degree"));
  } else if (head == "sym") {
    d = sym(parse_number(args, "degree"));
  } else if (head == "cyclic") {
    d = cyclic(parse_number(args, "order"));
  } else if (head == "dihedral") {
    d = dihedral(parse_number(args, "order"));
  } else if (head == "wreath") {
    d = wreath(parse_number(args, "prime"));
  } else if (head == "psl") {
    auto [dim, q] = parse_pair(args, "psl");
    d = psl(dim, q);
  } else if (head == "psigma") {
    auto [dim, q0] = parse_pair(args, "psigma");
    d = psigma(dim, q0);
  } else {
    throw InvalidArgument("unknown group descriptor '" + std::string(raw) + "'");
  }

  switch (d.kind) {
    case Kind::Alt:
      if (d.a < 3) throw InvalidArgument("alt:n needs n >= 3");
      break;
    case Kind::Sym:
      if (d.a < 2) throw InvalidArgument("sym:n needs n >= 2");
      break;
    case Kind::Cyclic:
      if (d.a < 1) throw InvalidArgument("cyclic:n needs n >= 1");
      break;
    case Kind::Dihedral:
      if (d.a < 6 || d.a % 2) throw InvalidArgument("dihedral:n needs n even and n >= 6");
      break;
    case Kind::Wreath:
      if (!is_prime(d.a)) throw InvalidArgument("wreath:p needs p prime");
      break;
    case Kind::PSL:
      check_linear_hypothesis(d.a, d.b);
      break;
    case Kind::PSLSigma:
      if (d.b > 256) throw InvalidArgument("psigma:d,q0 needs q0 <= 256");
      check_linear_hypothesis(d.a, std::uint64_t{d.b} * d.b);
      break;
    default:
      break;
  }
  return d;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::Alt: return "alt:" + std::to_string(a);
    case Kind::Sym: return "sym:" + std::to_string(a);
    case Kind::PSL: return "psl:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::PSLSigma: return "psigma:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::PSL2_11: return "psl2_11";
    case Kind::M11: return "m11";
    case Kind::M23: return "m23";
    case Kind::Cyclic: return "cyclic:" + std::to_string(a);
    case Kind::Dihedral: return "dihedral:" + std::to_string(a);
    case Kind::Wreath: return "wreath:" + std::to_string(a);
  }
  return "?";
}

void check_linear_hypothesis(std::uint32_t d, std::uint64_t q) {
  if (!is_prime(d)) throw HypothesisViolation("dimension " + std::to_string(d) + " is not prime");
  if (prime_power(q).first == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (q > (1u << 16)) throw InvalidArgument("field order exceeds 2^16");
  if (std::gcd(std::uint64_t{d}, q - 1) != 1)
    throw HypothesisViolation("gcd(" + std::to_string(d) + ", " + std::to_string(q - 1) + ") != 1");
}

BigInt psl_order(std::uint32_t d, std::uint64_t q) {
  BigInt bq = q;
  BigInt order = pow(bq, d * (d - 1) / 2);
  for (std::uint32_t j = 2; j <= d; ++j) order *= pow(bq, j) - 1;
  return order / std::gcd(std::uint64_t{d}, q - 1);
}

// --- projective space ---------------------------------------------------------

ProjectiveSpace::ProjectiveSpace(std::uint32_t d, std::uint32_t q) : d_(d) {
  auto [p, f] = prime_power(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (d < 2) throw InvalidArgument("projective space needs dimension >= 2");
  field_ = Field::get(p, f);
  std::uint64_t total = ipow(q, d);
  if (total > (std::uint64_t{1} << 24)) throw BoundExceeded("projective space too large");
  lookup_.assign(total, 0xffffffffu);
  std::vector<Field::Element> v(d);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t x = c;
    for (std::uint32_t i = d; i-- > 0;) {
      v[i] = static_cast<Field::Element>(x % q);
      x /= q;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](auto e) { return e != 0; });
    if (*lead != 1) continue;
    lookup_[c] = static_cast<std::uint32_t>(points_.size());
    points_.push_back(v);
  }
}

std::uint64_t ProjectiveSpace::code(const std::vector<Field::Element>& v) const {
  std::uint64_t c = 0;
  for (auto e : v) c = c * field_->order() + e;
  return c;
}

Point ProjectiveSpace::index_of(std::vector<Field::Element> v) const {
  if (v.size() != d_) throw InvalidArgument("vector has wrong dimension");
  auto lead = std::find_if(v.begin(), v.end(), [](auto e) { return e != 0; });
  if (lead == v.end()) throw InvalidArgument("zero vector is not a projective point");
  Field::Element s = field_->inv(*lead);
  for (auto& e : v) e = field_->mul(e, s);
  return lookup_[code(v)];
}

Permutation ProjectiveSpace::action(const Matrix& a) const {
  const Field& F = *field_;
  std::vector<Point> images(points_.size());
  std::vector<Field::Element> w(d_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& v = points_[i];
    for (std::uint32_t j = 0; j < d_; ++j) {
      Field::Element s = 0;
      for (std::uint32_t k = 0; k < d_; ++k) s = F.add(s, F.mul(v[k], a[k][j]));
      w[j] = s;
    }
    images[i] = index_of(w);
  }
  return Permutation(std::move(images));
}

Permutation ProjectiveSpace::frobenius(std::uint32_t e) const {
  const std::uint64_t power = ipow(field_->characteristic(), e);
  std::vector<Point> images(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto w = points_[i];
    for (auto& x : w) x = field_->pow(x, power);
    images[i] = index_of(w);
  }
  return Permutation(std::move(images));
}

Matrix ProjectiveSpace::identity() const {
  Matrix m(d_, std::vector<Field::Element>(d_, 0));
  for (std::uint32_t i = 0; i < d_; ++i) m[i][i] = 1;
  return m;
}

Matrix ProjectiveSpace::elementary(std::uint32_t i, std::uint32_t j, Field::Element lambda) const {
  Matrix m = identity();
  m[i][j] = lambda;
  return m;
}

Matrix ProjectiveSpace::singer_matrix() const {
  auto c = primitive_polynomial(*field_, d_);
  // Multiplication by x on GF(q)[x]/(m) in the basis 1, x, ..., x^(d-1), acting on rows.
  Matrix m(d_, std::vector<Field::Element>(d_, 0));
  for (std::uint32_t i = 0; i + 1 < d_; ++i) m[i][i + 1] = 1;
  for (std::uint32_t j = 0; j < d_; ++j) m[d_ - 1][j] = field_->neg(c[j]);
  return m;
}

// --- linear groups -----------------------------------------------------------

namespace {

// SL(d,q) on projective points; the image is PSL(d,q) whatever gcd(d, q-1) is.
std::vector<Permutation> sl_generators(const ProjectiveSpace& space) {
  const Field& F = space.field();
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < space.dimension(); ++i)
    for (std::uint32_t j = 0; j < space.dimension(); ++j) {
      if (i == j) continue;
      for (std::uint32_t k = 0; k < F.degree(); ++k) gens.push_back(space.action(space.elementary(i, j, F.exp(k))));
    }
  return gens;
}

PermGroup psl_unchecked(std::uint32_t d, std::uint32_t q) {
  ProjectiveSpace space(d, q);
  PermGroup g(space.size(), sl_generators(space));
  if (g.order() != psl_order(d, q))
    throw Error("PSL(" + std::to_string(d) + "," + std::to_string(q) + ") construction has order " +
                g.order().str());
  return g;
}

}  // namespace

PermGroup psl(std::uint32_t d, std::uint32_t q) {
  check_linear_hypothesis(d, q);
  return psl_unchecked(d, q);
}

Permutation singer_cycle(std::uint32_t d, std::uint32_t q) {
  check_linear_hypothesis(d, q);
  ProjectiveSpace space(d, q);
  return space.action(space.singer_matrix());
}

PermGroup point_stabilizer(const PermGroup& group, Point point) {
  if (point >= group.degree()) throw InvalidArgument("point out of range");
  return group.stabilizer(point);
}

PslSigma psl_sigma(std::uint32_t d, std::uint32_t q0) {
  const std::uint64_t q = std::uint64_t{q0} * q0;
  check_linear_hypothesis(d, q);
  auto [p, f0] = prime_power(q0);
  ProjectiveSpace space(d, static_cast<std::uint32_t>(q));
  const Field& F = space.field();
  auto gens = sl_generators(space);
  PslSigma out;
  out.socle = PermGroup(space.size(), gens);
  if (out.socle.order() != psl_order(d, q)) throw Error("PSL socle construction failed");
  out.phi = space.frobenius(f0);
  gens.push_back(out.phi);
  out.group = PermGroup(space.size(), gens);
  if (out.group.order() != 2 * psl_order(d, q)) throw Error("PSigmaL construction failed");
  // GF(q0) inside GF(q) is generated by w^(q0+1), whose first f0 powers span it over GF(p).
  std::vector<Permutation> sub;
  const Field::Element lambda = F.exp(q0 + 1);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      if (i == j) continue;
      for (std::uint32_t k = 0; k < f0; ++k) sub.push_back(space.action(space.elementary(i, j, F.pow(lambda, k))));
    }
  out.subfield = PermGroup(space.size(), sub);
  (void)p;
  return out;
}

PermGroup mathieu(std::uint32_t n) {
  std::vector<Permutation> gens;
  BigInt expected;
  if (n == 11) {
    gens = {Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)"), Permutation::parse("(3,7,11,8)(4,10,5,6)", 11)};
    expected = 7920;
  } else if (n == 23) {
    gens = {Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"),
            Permutation::parse("(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)", 23)};
    expected = 10200960;
  } else {
    throw InvalidArgument("mathieu(n) needs n in {11, 23}");
  }
  PermGroup g(n, gens);
  if (g.order() != expected) throw Error("M" + std::to_string(n) + " generators give order " + g.order().str());
  return g;
}

const Psl211& psl2_11() {
  static const Psl211 instance = [] {
    ProjectiveSpace space(2, 11);
    PermGroup g12 = psl_unchecked(2, 11);
    auto elems = g12.elements();
    std::sort(elems.begin(), elems.end());
    std::vector<Permutation> involutions, threes;
    for (const auto& x : elems) {
      auto o = x.order();
      if (o == 2) involutions.push_back(x);
      if (o == 3) threes.push_back(x);
    }
    for (const auto& a : involutions)
      for (const auto& b : threes) {
        PermGroup h(12, {a, b});
        if (h.order() != 60) continue;
        auto act = coset_action(g12, h);
        Psl211 out{act.image, act.image_of(space.action(space.elementary(0, 1, 1)))};
        if (act.image.degree() != 11 || out.order11.order() != 11) throw Error("PSL(2,11) on 11 points failed");
        return out;
      }
    throw Error("no A5 found in PSL(2,11)");
  }();
  return instance;
}

PermGroup classical_group(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  const std::uint32_t n = desc.a;
  switch (desc.kind) {
    case Kind::Sym:
      if (n < 2) throw InvalidArgument("sym:n needs n >= 2");
      if (n == 2) return PermGroup(2, {cycle_of(2, 0, 2)});
      return PermGroup(n, {cycle_of(n, 0, 2), cycle_of(n, 0, n)});
    case Kind::Alt:
      if (n < 3) throw InvalidArgument("alt:n needs n >= 3");
      if (n == 3) return PermGroup(3, {cycle_of(3, 0, 3)});
      return PermGroup(n, {cycle_of(n, 0, 3), n % 2 ? cycle_of(n, 0, n) : cycle_of(n, 1, n - 1)});
    case Kind::Cyclic:
      if (n < 1) throw InvalidArgument("cyclic:n needs n >= 1");
      return PermGroup(n, {cycle_of(n, 0, n)});
    case Kind::Dihedral: {
      if (n < 6 || n % 2) throw InvalidArgument("dihedral:n needs n even and n >= 6");
      const std::uint32_t m = n / 2;
      std::vector<Point> reflection(m);
      for (std::uint32_t x = 0; x < m; ++x) reflection[x] = (2 * m + 2 - x) % m;  // x -> 2 - x
      return PermGroup(m, {cycle_of(m, 0, m), Permutation(reflection)});
    }
    case Kind::Wreath: {
      if (!is_prime(n)) throw InvalidArgument("wreath:p needs p prime");
      std::vector<Point> swap(2 * n);
      for (std::uint32_t x = 0; x < 2 * n; ++x) swap[x] = (x + n) % (2 * n);
      return PermGroup(2 * n, {cycle_of(2 * n, 0, n), Permutation(swap)});
    }
    default:
      throw InvalidArgument(desc.to_string() + " has no natural classical action");
  }
}

PermGroup make_group(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::PSL: return psl(desc.a, desc.b);
    case Kind::PSLSigma: return psl_sigma(desc.a, desc.b).group;
    case Kind::PSL2_11: return psl2_11().group;
    case Kind::M11: return mathieu(11);
    case Kind::M23: return mathieu(23);
    default: return classical_group(desc);
  }
}

PermGroup simple_factor(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::Alt:
      if (desc.a < 5) throw InvalidArgument("alt:n is simple only for n >= 5");
      return classical_group(desc);
    case Kind::PSL: return psl(desc.a, desc.b);
    case Kind::PSLSigma: return psl_sigma(desc.a, desc.b).socle;
    case Kind::PSL2_11: return psl2_11().group;
    case Kind::M11: return mathieu(11);
    case Kind::M23: return mathieu(23);
    default:
      throw InvalidArgument(desc.to_string() + " is not a nonabelian simple factor of the zoo");
  }
}

Assembled assemble(const std::vector<GroupDescriptor>& factors, std::size_t s,
                   const std::vector<Permutation>& involutions) {
  if (factors.empty()) throw InvalidArgument("assemble needs at least one factor");
  if (s > factors.size()) throw InvalidArgument("s exceeds the number of factors");
  if (involutions.size() != s) throw InvalidArgument("exactly s involutions are required");
  Assembled out;
  out.factors = factors;
  out.twisted = s;
  std::size_t degree = 0;
  for (const auto& f : factors) {
    out.simple.push_back(simple_factor(f));
    out.offsets.push_back(degree);
    out.degrees.push_back(out.simple.back().degree());
    degree += out.simple.back().degree();
  }
  std::vector<Permutation> gens;
  BigInt expected = s > 0 ? 2 : 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& g : out.simple[i].generators()) gens.push_back(g.embedded(degree, out.offsets[i]));
    expected *= out.simple[i].order();
  }
  std::vector<Point> diag(degree);
  std::iota(diag.begin(), diag.end(), Point{0});
  for (std::size_t i = 0; i < s; ++i) {
    const auto& z = involutions[i];
    const auto& t = out.simple[i];
    const std::string name = factors[i].to_string();
    if (z.degree() != t.degree()) throw InvalidArgument("involution for " + name + " has the wrong degree");
    if (z.order() != 2) throw InvalidArgument("z for " + name + " is not of order 2");
    if (t.contains(z)) throw InvalidArgument("z for " + name + " is an inner element");
    for (const auto& g : t.generators())
      if (!t.contains(conjugate(g, z))) throw InvalidArgument("z for " + name + " does not normalize it");
    for (std::size_t x = 0; x < z.degree(); ++x)
      diag[out.offsets[i] + x] = static_cast<Point>(out.offsets[i] + z[static_cast<Point>(x)]);
  }
  out.diagonal = Permutation(diag);
  if (s > 0) gens.push_back(out.diagonal);
  out.group = PermGroup(degree, gens);
  if (out.group.order() != expected) throw Error("assembled group has order " + out.group.order().str());
  return out;
}

Table1Triple table1_triple(const GroupDescriptor& desc) {
  using Kind = GroupDescriptor::Kind;
  Table1Triple t{desc, {}, {}, {}};
  switch (desc.kind) {
    case Kind::Alt:
    case Kind::Sym:
      if (!is_prime(desc.a) || desc.a < 5) throw InvalidArgument("Table 1 needs alt:p / sym:p with p >= 5 prime");
      t.G = classical_group(desc);
      t.k = cycle_of(desc.a, 0, desc.a);
      break;
    case Kind::PSL:
      t.G = psl(desc.a, desc.b);
      t.k = singer_cycle(desc.a, desc.b);
      break;
    case Kind::PSLSigma:
      t.G = psl_sigma(desc.a, desc.b).group;
      t.k = singer_cycle(desc.a, desc.b * desc.b);
      break;
    case Kind::PSL2_11:
      t.G = psl2_11().group;
      t.k = psl2_11().order11;
      break;
    case Kind::M11:
    case Kind::M23:
      t.G = mathieu(desc.a);
      t.k = cycle_of(desc.a, 0, desc.a);
      break;
    default:
      throw InvalidArgument(desc.to_string() + " is not a Table 1 group");
  }
  t.H = t.G.stabilizer(0);
  return t;
}

std::vector<GroupDescriptor> table1_catalog() {
  using D = GroupDescriptor;
  std::vector<D> out;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    out.push_back(D::alt(p));
    out.push_back(D::sym(p));
  }
  out.push_back(D::psl2_11());
  out.push_back(D::m11());
  out.push_back(D::m23());
  out.push_back(D::psl(3, 2));
  out.push_back(D::psl(3, 3));
  out.push_back(D::psl(2, 4));
  out.push_back(D::psl(2, 8));
  out.push_back(D::psl(2, 16));
  out.push_back(D::psigma(2, 2));
  out.push_back(D::psigma(2, 4));
  return out;
}

}  // namespace hallskew
