// Acceptance run: one PASS/FAIL line per criterion. Derived values are checked
// against the brute-force oracles in oracle.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hallskew/errors.hpp"
#include "hallskew/factorization.hpp"
#include "hallskew/maps.hpp"
#include "hallskew/numth.hpp"
#include "hallskew/skew.hpp"
#include "hallskew/suites.hpp"
#include "hallskew/zoo.hpp"
#include "oracle.hpp"

using namespace hallskew;

namespace {

using Clock = std::chrono::steady_clock;

// Failures collected while a criterion runs; empty means PASS.
struct Result {
  std::vector<std::string> failures;
  std::vector<std::string> timings;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  // Runs part under a time limit in seconds. Exceptions become failures.
  void timed(const std::string& label, double limit, const std::function<void()>& part) {
    const auto start = Clock::now();
    try {
      part();
    } catch (const std::exception& e) {
      failures.push_back(label + " threw: " + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%.2f s / %.0f s", label.empty() ? "" : (label + " ").c_str(), seconds, limit);
    timings.emplace_back(buf);
    if (seconds > limit) failures.push_back(label + (label.empty() ? "" : " ") + "time limit exceeded");
  }
};

std::string dec(const BigInt& x) { return x.str(); }

BigInt factorial(std::uint32_t n) {
  BigInt r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

PermGroup gens(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::parse(c, degree));
  return PermGroup(degree, g);
}

struct Triple {
  PermGroup G, H;
  Permutation k;
};

Triple s4_d8() {
  return {classical_group(GroupDescriptor::sym(4)), classical_group(GroupDescriptor::dihedral(8)),
          Permutation::parse("(1,2,3)", 4)};
}

Triple wreath5() {
  return {classical_group(GroupDescriptor::wreath(5)),
          gens(10, {"(1,2,3,4,5)(6,10,9,8,7)", "(1,6)(2,7)(3,8)(4,9)(5,10)"}), Permutation::parse("(1,2,3,4,5)", 10)};
}

// Expected (|G|, |H|, |K|) per catalog row.
struct Row {
  GroupDescriptor desc;
  BigInt g, h;
  std::uint64_t k;
};

std::vector<Row> expected_rows() {
  std::vector<Row> rows;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    rows.push_back({GroupDescriptor::alt(p), factorial(p) / 2, factorial(p - 1) / 2, p});
    rows.push_back({GroupDescriptor::sym(p), factorial(p), factorial(p - 1), p});
  }
  rows.push_back({GroupDescriptor::psl2_11(), 660, 60, 11});
  rows.push_back({GroupDescriptor::m11(), 7920, 720, 11});
  rows.push_back({GroupDescriptor::m23(), 10200960, 443520, 23});
  rows.push_back({GroupDescriptor::psl(3, 2), 168, 24, 7});
  rows.push_back({GroupDescriptor::psl(3, 3), 5616, 432, 13});
  for (std::uint32_t f : {2u, 3u, 4u}) {
    const std::uint64_t q = 1ull << f;
    rows.push_back({GroupDescriptor::psl(2, static_cast<std::uint32_t>(q)), BigInt(q * (q * q - 1)), BigInt(q * (q - 1)), q + 1});
  }
  rows.push_back({GroupDescriptor::psigma(2, 2), 120, 24, 5});
  rows.push_back({GroupDescriptor::psigma(2, 4), 8160, 480, 17});
  return rows;
}

// 1 ----------------------------------------------------------------------------

Result criterion1() {
  Result r;
  r.timed("", 60, [&] {
    std::vector<std::string> catalog;
    for (const auto& d : table1_catalog()) catalog.push_back(d.to_string());
    for (const Row& row : expected_rows()) {
      const std::string name = row.desc.to_string();
      r.expect(std::find(catalog.begin(), catalog.end(), name) != catalog.end(), name + " missing from catalog");
      const Table1Triple t = table1_triple(row.desc);
      const Factorization f = certify_factorization(t.G, t.H, t.k);
      r.expect(t.G.order() == row.g && t.H.order() == row.h && f.k_order() == row.k,
               name + " orders " + dec(t.G.order()) + "/" + dec(t.H.order()) + "/" + std::to_string(f.k_order()));
      // Hall: gcd(|H|, |K|) = 1, recomputed here.
      r.expect(f.is_hall() == (boost::multiprecision::gcd(row.h, BigInt(row.k)) == 1), name + " Hall flag");
      r.expect(f.is_hall(), name + " not Hall");
      r.expect(f.k_core_free(), name + " not core-free");
    }
    const SuiteReport suite = run_suite("table1");
    r.expect(suite.ok(), "verify table1 failed");
  });
  return r;
}

// 2 ----------------------------------------------------------------------------

Result criterion2() {
  Result r;
  r.timed("", 10, [&] {
    for (const auto& desc : table1_catalog()) {
      const std::string name = desc.to_string();
      try {
        const Table1Triple t = table1_triple(desc);
        const Factorization f = certify_factorization(t.G, t.H, t.k);
        const SkewFromFactorization s = skew_from_factorization(f);
        const AxiomCheck axioms = verify_axioms(s.skew);
        r.expect(axioms.ok, name + " axiom fails: " + axioms.failure);
        r.expect(s.faithful && s.skew.order() == f.k_order(), name + " order " + std::to_string(s.skew.order()));
        if (desc == GroupDescriptor::sym(5)) r.expect(s.skew.order() == 5, "sym:5 skew order != 5");
      } catch (const BoundExceeded&) {
        r.failures.push_back(name + " over element bound");
      }
    }

    const Triple t = s4_d8();
    const Factorization f = certify_factorization(t.G, t.H, t.k);
    const SkewMorphism s = skew_from_factorization(f).skew;
    r.expect(s.order() == 3, "D8 skew order " + std::to_string(s.order()));
    std::set<std::uint64_t> pis(s.pi().begin(), s.pi().end());
    r.expect(pis.size() > 1, "D8 skew has constant pi");

    const auto h = oracle::closure(t.H.generators(), 4);
    const oracle::Skew o = oracle::skew_from(h, t.k);
    r.expect(oracle::skew_axiom_holds(h, o), "oracle axiom fails on D8");
    r.expect(o.order == 3, "oracle D8 order");
    bool same = true;
    for (std::uint64_t i = 0; i < s.size(); ++i) {
      same = same && o.rho.at(s.element(i)) == s.element(s.rho()[i]);
      same = same && o.pi.at(s.element(i)) == s.pi()[i];
    }
    r.expect(same, "D8 skew differs from oracle");

    bool listed = false;
    for (const SkewMorphism& e : brute_enumerate(s.base())) {
      bool eq = true;
      for (std::uint64_t i = 0; i < s.size() && eq; ++i) eq = e.element(e.rho()[e.index_of(s.element(i))]) == s.element(s.rho()[i]);
      listed = listed || eq;
    }
    r.expect(listed, "brute_enumerate(D8) misses the skew-morphism");
    bool in_oracle = false;
    for (const oracle::Skew& e : oracle::all_skews(h)) in_oracle = in_oracle || e.rho == o.rho;
    r.expect(in_oracle, "oracle enumeration of D8 misses the skew-morphism");
  });
  return r;
}

// 3 ----------------------------------------------------------------------------

Result criterion3() {
  Result r;
  r.timed("", 30, [&] {
    auto check = [&](const std::string& name, const PermGroup& g, std::uint64_t expected) {
      const BigInt n = count_involutions(g);
      r.expect(n == expected, name + " involutions " + dec(n));
      if (g.order() <= 10000) {
        const std::size_t brute = oracle::count_if_involution(oracle::closure(g.generators(), g.degree()));
        r.expect(brute == expected, name + " oracle involutions " + std::to_string(brute));
      }
    };
    check("m11", make_group(GroupDescriptor::m11()), 3 * 5 * 11);
    check("psl2_11", make_group(GroupDescriptor::psl2_11()), 5 * 11);
    for (std::uint32_t q : {4u, 8u, 16u}) check("psl:2," + std::to_string(q), psl(2, q), std::uint64_t{q} * q - 1);
  });
  return r;
}

// 4 ----------------------------------------------------------------------------

Result criterion4() {
  Result r;
  r.timed("", 1, [&] {
    const RotaryPair pair = example_rotary_pair(GroupDescriptor::alt(7));
    r.expect(pair.rho == Permutation::parse("(1,2,3,4,5,6,7)", 7), "rho");
    r.expect(pair.z == Permutation::parse("(1,2)(3,4)", 7), "z");
    const Permutation zr = conjugate(pair.z, pair.rho);
    r.expect(pair.z * zr == Permutation::parse("(1,3,5,4,2)", 7), "z z^rho = " + (pair.z * zr).to_string());
    const Permutation rz = pair.rho * pair.z;
    r.expect(rz.order() == 5, "|rho z| = " + std::to_string(rz.order()));
    r.expect(rz.fixed_points() == std::vector<Point>{0, 2}, "rho z fixed points");
    r.expect(PermGroup(7, {pair.z, zr}).order() == 10, "|<z, z^rho>|");
    r.expect(oracle::closure({pair.z, zr}, 7).size() == 10, "oracle |<z, z^rho>|");
  });
  return r;
}

// 5 ----------------------------------------------------------------------------

Result criterion5() {
  Result r;
  r.timed("", 5, [&] {
    const PermGroup a5 = make_group(GroupDescriptor::alt(5));
    const RotaryPair pair =
        make_rotary_pair(a5, Permutation::parse("(1,2,3,4,5)", 5), Permutation::parse("(1,2)(3,4)", 5));
    const RotationMap rota = build_map(pair, RotationMap::Kind::Rotary);
    r.expect(rota.V == 12 && rota.E == 30 && rota.F == 20 && rota.chi == 2 && rota.genus == 0,
             "RotaMap(A5) " + rota.to_json());
    const RotationMap biro = build_map(pair, RotationMap::Kind::Birotary);
    r.expect(biro.F == 6 && biro.face_stabilizer_order == 10 && biro.chi == -12, "BiRoMap(A5) " + biro.to_json());

    const PermGroup s5 = make_group(GroupDescriptor::sym(5));
    const RotaryPair spair = make_rotary_pair(s5, Permutation::parse("(1,2,3,4,5)", 5), Permutation::parse("(1,2)", 5));
    const RotationMap srota = build_map(spair, RotationMap::Kind::Rotary);
    r.expect(srota.chi == -6 && srota.genus == 4, "RotaMap(S5) " + srota.to_json());

    // V, E, F recounted as explicit coset partitions of the darts.
    for (const auto* p : {&pair, &spair}) {
      const auto darts = oracle::closure(p->G.generators(), 5);
      const auto v = oracle::right_coset_count(darts, oracle::closure({p->rho}, 5));
      const auto e = oracle::right_coset_count(darts, oracle::closure({p->z}, 5));
      const auto f = oracle::right_coset_count(darts, oracle::closure({p->rho * p->z}, 5));
      const RotationMap m = build_map(*p, RotationMap::Kind::Rotary);
      r.expect(m.V == v && m.E == e && m.F == f, "oracle coset counts");
    }
  });
  return r;
}

// 6 ----------------------------------------------------------------------------

Result criterion6() {
  Result r;
  r.timed("full", 120, [&] {
    const std::vector<GroupDescriptor> factors{GroupDescriptor::psl(2, 4), GroupDescriptor::psl(3, 2)};
    r.expect(make_group(factors[0]).order() * make_group(factors[1]).order() == 10080, "|G| != 10080");
    DecompositionOptions options;
    options.full = true;
    const DecompositionReport d = verify_decomposition(factors, 0, {}, options);
    r.expect(d.ok, "full check: " + d.failure);
    r.expect(!d.sampled, "full check was sampled");
    r.expect(d.rho_order == 35, "|K| = " + std::to_string(d.rho_order));
    r.expect(d.vertices == 10080 / 35 && d.product_vertices == d.vertices, "vertex counts");
    r.expect(d.checked == 2 * d.edges, "not every edge checked");
  });
  r.timed("twisted", 300, [&] {
    const std::vector<GroupDescriptor> factors{GroupDescriptor::alt(7), GroupDescriptor::psigma(2, 4)};
    const DecompositionReport d = verify_decomposition(factors, 2);
    r.expect(d.ok, "twisted check: " + d.failure);
    r.expect(d.sampled && d.checked >= kSampledPairs, "twisted check sampled " + std::to_string(d.checked));
    r.expect(d.rho_order == 119, "twisted |K| = " + std::to_string(d.rho_order));
  });
  return r;
}

// 7 ----------------------------------------------------------------------------

Result criterion7() {
  Result r;
  r.timed("", 120, [&] {
    const SuiteReport suite = run_suite("catalog");
    for (const auto& item : suite.items) r.expect(item.ok, item.name + ": " + item.detail);
    r.expect(suite.items.size() == 2, "catalog suite size");
    // (A5 x A6) Z77 as orders: 60 * 360 * 77 = |PSL(2,11)| |A7|.
    r.expect(BigInt(60) * 360 * 77 == BigInt(660) * 2520, "order identity");
    r.expect(std::gcd(60ull * 360, 77ull) == 1, "Hall gcd");
  });
  return r;
}

// 8 ----------------------------------------------------------------------------

Result criterion8() {
  Result r;
  r.timed("", 10, [&] {
    {
      const Triple t = s4_d8();
      const ShapeReport s = shape_check(certify_factorization(t.G, t.H, t.k));
      r.expect(s.shape == 1, "S4 shape " + std::to_string(s.shape));
      r.expect(s.n_order == 4, "S4 |N| = " + dec(s.n_order));
      const auto g = oracle::closure(t.G.generators(), 4);
      r.expect(oracle::core(g, oracle::closure(t.H.generators(), 4)).size() == 4, "S4 oracle core");
    }
    {
      const Triple t = wreath5();
      const ShapeReport s = shape_check(certify_factorization(t.G, t.H, t.k));
      r.expect(s.shape == 1, "wreath:5 shape " + std::to_string(s.shape));
      const auto g = oracle::closure(t.G.generators(), 10);
      const std::size_t core = oracle::core(g, oracle::closure(t.H.generators(), 10)).size();
      r.expect(s.n_order == core, "wreath:5 |N| differs from oracle");
      r.expect(s.n_order == 5, "wreath:5 |N| = " + dec(s.n_order) + ", expected 5");
    }
    {
      const Table1Triple t = table1_triple(GroupDescriptor::psl2_11());
      const ShapeReport s = shape_check(certify_factorization(t.G, t.H, t.k));
      r.expect(s.shape == 2, "psl2_11 shape " + std::to_string(s.shape));
    }
  });
  return r;
}

// 9 ----------------------------------------------------------------------------

Result criterion9() {
  Result r;
  r.timed("", 30, [&] {
    for (auto [d, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{3, 2}, {3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
      const std::string name = "gcd_identity(" + std::to_string(d) + "," + std::to_string(q) + ")";
      try {
        const GcdIdentityReport g = gcd_identity(d, q);
        r.expect(g.ok, name + " fails");
        // e = (q^d - 1)/(q - 1) and gcd(e, q^j - 1) = 1 for 1 <= j < d, recomputed.
        std::uint64_t qd = 1;
        for (std::uint32_t i = 0; i < d; ++i) qd *= q;
        const std::uint64_t e = (qd - 1) / (q - 1);
        r.expect(g.e == e, name + " e");
        std::uint64_t qj = 1;
        for (std::uint32_t j = 1; j < d; ++j) {
          qj *= q;
          r.expect(std::gcd(e, qj - 1) == 1, name + " gcd(e, q^" + std::to_string(j) + " - 1) != 1");
        }
      } catch (const HypothesisViolation&) {
        r.failures.push_back(name + " hypothesis violation");
      }
    }
    const SuiteReport family = run_suite("family");
    for (const auto& item : family.items) r.expect(item.ok, item.name + ": " + item.detail);
    const PrimeFamilyReport f5 = prime_family(2, 5);
    std::vector<std::uint64_t> primes;  // primes strictly between 5 and 25
    for (std::uint64_t n = 6; n < 25; ++n) {
      bool prime = true;
      for (std::uint64_t m = 2; m * m <= n; ++m) prime = prime && n % m;
      if (prime) primes.push_back(n);
    }
    r.expect(f5.family == primes, "prime_family(2,5) family");
  });
  return r;
}

// 10 ---------------------------------------------------------------------------

Result criterion10() {
  Result r;
  r.timed("", 120, [&] {
    const SuiteReport lemma = run_suite("lemma21");
    for (const auto& item : lemma.items) r.expect(item.ok, item.name + ": " + item.detail);

    // g -> (h, j) with g = h k^j is a bijection G -> H x Z_|k|.
    std::vector<std::pair<std::string, Triple>> triples{{"sym:4/d8", s4_d8()}, {"wreath:5", wreath5()}};
    for (const auto& desc : table1_catalog()) {
      if (make_group(desc).order() > 100000) continue;
      Table1Triple t = table1_triple(desc);
      triples.push_back({desc.to_string(), {t.G, t.H, t.k}});
    }
    for (const auto& [name, t] : triples) {
      const Factorization f = certify_factorization(t.G, t.H, t.k);
      const auto g = oracle::closure(t.G.generators(), t.G.degree());
      const auto h = oracle::closure(t.H.generators(), t.G.degree());
      std::set<std::pair<Permutation, std::uint64_t>> images;
      bool ok = g.size() == h.size() * t.k.order();
      for (const auto& x : g) {
        const auto [y, j] = f.decompose(x);
        ok = ok && h.count(y) && j < t.k.order() && y * t.k.pow(static_cast<std::int64_t>(j)) == x;
        ok = ok && f.k_exponent(x) == j;
        images.insert({y, j});
      }
      r.expect(ok && images.size() == g.size(), name + " decomposition is not a bijection");
    }

    // Stabilizer-chain order against closure, for zoo groups up to 5000 elements.
    std::vector<GroupDescriptor> zoo;
    for (std::uint32_t n = 3; n <= 7; ++n) zoo.push_back(GroupDescriptor::alt(n));
    for (std::uint32_t n = 2; n <= 7; ++n) zoo.push_back(GroupDescriptor::sym(n));
    for (std::uint32_t n : {1u, 2u, 12u, 60u}) zoo.push_back(GroupDescriptor::cyclic(n));
    for (std::uint32_t n : {6u, 8u, 10u, 24u}) zoo.push_back(GroupDescriptor::dihedral(n));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) zoo.push_back(GroupDescriptor::wreath(p));
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) zoo.push_back(GroupDescriptor::psl(2, q));
    zoo.push_back(GroupDescriptor::psl(3, 2));
    zoo.push_back(GroupDescriptor::psl2_11());
    zoo.push_back(GroupDescriptor::psigma(2, 2));
    std::size_t compared = 0;
    for (const auto& desc : zoo) {
      const PermGroup group = make_group(desc);
      if (group.order() > 5000) continue;
      const auto brute = oracle::closure(group.generators(), group.degree());
      r.expect(group.order() == brute.size(), desc.to_string() + " order " + dec(group.order()) + " vs " +
                                                   std::to_string(brute.size()));
      ++compared;
    }
    r.expect(compared == zoo.size() - 1, "zoo filter");  // sym:7 is over 5000
  });
  return r;
}

struct Criterion {
  int id;
  const char* title;
  Result (*run)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "catalog factorizations are core-free Hall", criterion1},
      {2, "skew-morphism round trip", criterion2},
      {3, "involution counts", criterion3},
      {4, "alternating rotary pair at p = 7", criterion4},
      {5, "map census", criterion5},
      {6, "product decomposition of coset graphs", criterion6},
      {7, "PSL(2,11) x A7 catalog instance", criterion7},
      {8, "shape checks", criterion8},
      {9, "number theory", criterion9},
      {10, "property suites", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const Result r = c.run();
    std::ostringstream line;
    line << (r.failures.empty() ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " [";
    for (std::size_t i = 0; i < r.timings.size(); ++i) line << (i ? ", " : "") << r.timings[i];
    line << "]";
    if (!r.failures.empty()) {
      line << ": ";
      for (std::size_t i = 0; i < r.failures.size(); ++i) line << (i ? "; " : "") << r.failures[i];
    }
    std::cout << line.str() << std::endl;
    all_ok = all_ok && r.failures.empty();
  }
  return all_ok ? 0 : 1;
}
