#include "hallskew/suites.hpp"

#include <functional>

#include "json.hpp"

#include "hallskew/errors.hpp"
#include "hallskew/factorization.hpp"
#include "hallskew/maps.hpp"
#include "hallskew/numth.hpp"
#include "hallskew/zoo.hpp"

namespace hallskew {

namespace {

// Runs check, turning an exception into a failed item.
void add(SuiteReport& report, std::string name, const std::function<bool(std::string&)>& check) {
  SuiteItem item{std::move(name), false, {}};
  try {
    item.ok = check(item.detail);
  } catch (const std::exception& e) {
    item.ok = false;
    item.detail = e.what();
  }
  report.items.push_back(std::move(item));
}

PermGroup group_of(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(Permutation::parse(c, degree));
  return PermGroup(degree, gens);
}

void table1(SuiteReport& r) {
  for (const auto& desc : table1_catalog())
    add(r, desc.to_string(), [&](std::string& detail) {
      const Table1Triple t = table1_triple(desc);
      const Factorization f = certify_factorization(t.G, t.H, t.k);
      detail = "|G| = " + t.G.order().str() + ", |H| = " + t.H.order().str() + ", |K| = " +
               std::to_string(f.k_order()) + (f.is_hall() ? ", Hall" : ", not Hall") +
               (f.k_core_free() ? ", core-free" : ", not core-free");
      return f.is_hall() && f.k_core_free();
    });
}

void lemma21(SuiteReport& r) {
  add(r, "S4 = D8 Z3, M = A4", [](std::string& detail) {
    const PermGroup g = classical_group(GroupDescriptor::sym(4));
    const PermGroup h = classical_group(GroupDescriptor::dihedral(8));
    const Factorization f = certify_factorization(g, h, Permutation::parse("(1,2,3)", 4));
    const NormalSplit s = normal_split(f, classical_group(GroupDescriptor::alt(4)));
    detail = "|M n H| = " + s.mh_order.str() + ", |M n K| = " + s.mk_order.str();
    return s.ok() && s.mh_order == 4 && s.mk_order == 3;
  });
  add(r, "Z5 wr S2 = D10 Z5, M = Z5^2", [](std::string& detail) {
    const PermGroup g = classical_group(GroupDescriptor::wreath(5));
    const PermGroup h = group_of(10, {"(1,2,3,4,5)(6,10,9,8,7)", "(1,6)(2,7)(3,8)(4,9)(5,10)"});
    const Factorization f = certify_factorization(g, h, Permutation::parse("(1,2,3,4,5)", 10));
    const NormalSplit s = normal_split(f, group_of(10, {"(1,2,3,4,5)", "(6,7,8,9,10)"}));
    detail = "|M n H| = " + s.mh_order.str() + ", |M n K| = " + s.mk_order.str();
    return s.ok() && s.mh_order == 5 && s.mk_order == 5;
  });
}

void gcd_grid(SuiteReport& r) {
  for (std::uint32_t d : {2u, 3u, 5u, 7u})
    for (std::uint64_t q = 2; q <= 64; ++q) {
      if (prime_power(q).first == 0 || std::gcd<std::uint64_t>(d, q - 1) != 1) continue;
      add(r, "gcd_identity(" + std::to_string(d) + "," + std::to_string(q) + ")", [&](std::string& detail) {
        const GcdIdentityReport g = gcd_identity(d, q);
        detail = "e = " + g.e.str() + ", gcd(|H|, |K|) = " + g.stabilizer_gcd.str();
        return g.ok;
      });
    }
}

void family(SuiteReport& r) {
  add(r, "prime_family(2,3)", [](std::string& detail) {
    const PrimeFamilyReport f = prime_family(2, 3);
    detail = std::to_string(f.family.size()) + " primes, " + std::to_string(f.checks.size()) + " gcd checks";
    return f.ok && f.family == std::vector<std::uint64_t>{5, 7};
  });
  add(r, "prime_family(2,5)", [](std::string& detail) {
    const PrimeFamilyReport f = prime_family(2, 5);
    bool all = !f.checks.empty();
    for (const auto& c : f.checks) all = all && c.ok;
    detail = std::to_string(f.family.size()) + " primes, " + std::to_string(f.checks.size()) + " gcd checks";
    return f.ok && all && f.family.size() == 6;
  });
  add(r, "psl2_pair_infeasible(e,f), 1 <= e < f <= 10", [](std::string& detail) {
    std::size_t pairs = 0;
    for (std::uint64_t f = 2; f <= 10; ++f)
      for (std::uint64_t e = 1; e < f; ++e) {
        if (!psl2_pair_infeasible(e, f)) {
          detail = "feasible at (" + std::to_string(e) + "," + std::to_string(f) + ")";
          return false;
        }
        ++pairs;
      }
    detail = std::to_string(pairs) + " pairs";
    return true;
  });
  add(r, "solvable_f_ok(f) iff f = 2, 4 mod 6, 1 <= f <= 24", [](std::string& detail) {
    for (std::uint64_t f = 1; f <= 24; ++f)
      if (solvable_f_ok(f) != (f % 6 == 2 || f % 6 == 4)) {
        detail = "differs at f = " + std::to_string(f);
        return false;
      }
    return true;
  });
}

void products(SuiteReport& r, const SuiteOptions& options) {
  DecompositionOptions decomposition;
  decomposition.full = options.full;
  struct Instance {
    std::vector<GroupDescriptor> factors;
    std::size_t s;
  };
  const std::vector<Instance> instances{
      {{GroupDescriptor::psl(2, 4), GroupDescriptor::psl(3, 2)}, 0},
      {{GroupDescriptor::alt(5)}, 0},
      {{GroupDescriptor::alt(5)}, 1},
      {{GroupDescriptor::alt(5), GroupDescriptor::alt(7)}, 2},
      {{GroupDescriptor::alt(7), GroupDescriptor::psigma(2, 4)}, 2},
  };
  for (const auto& inst : instances) {
    std::string name = "[";
    for (std::size_t i = 0; i < inst.factors.size(); ++i) name += (i ? ", " : "") + inst.factors[i].to_string();
    name += "], s = " + std::to_string(inst.s);
    add(r, name, [&](std::string& detail) {
      const DecompositionReport d = verify_decomposition(inst.factors, inst.s, {}, decomposition);
      detail = std::string(d.sampled ? "sampled" : "full") + ", " + std::to_string(d.vertices) + " vertices, |K| = " +
               std::to_string(d.rho_order) + ", " + std::to_string(d.checked) + " checks" +
               (d.ok ? "" : ": " + d.failure);
      return d.ok;
    });
  }
}

void catalog(SuiteReport& r) {
  add(r, "PSL(2,11) x A7 = (A5 x A6) Z77", [](std::string& detail) {
    const Assembled g = assemble({GroupDescriptor::psl2_11(), GroupDescriptor::alt(7)}, 0, {});
    const PermGroup h0 = point_stabilizer(g.simple[0], 0), h1 = point_stabilizer(g.simple[1], 0);
    std::vector<Permutation> gens;
    for (const auto& x : h0.generators()) gens.push_back(g.embed(0, x));
    for (const auto& x : h1.generators()) gens.push_back(g.embed(1, x));
    const PermGroup h(g.group.degree(), gens);
    const Permutation k = g.embed(0, psl2_11().order11) * g.embed(1, Permutation::parse("(1,2,3,4,5,6,7)", 7));
    const Factorization f = certify_factorization(g.group, h, k);
    detail = std::to_string(g.group.degree()) + " points, |H| = " + h.order().str() + ", |K| = " +
             std::to_string(f.k_order());
    return g.group.degree() == 18 && h.order() == 60 * 360 && f.k_order() == 77 && f.is_hall() && f.k_core_free();
  });
  add(r, "hyp1_compatible(PSL(2,11), A7)", [](std::string& detail) {
    const auto a = profile(GroupDescriptor::psl2_11()), b = profile(GroupDescriptor::alt(7));
    detail = "e = (" + a.e.str() + ", " + b.e.str() + ")";
    return hyp1_compatible({a, b}).ok && a.e == 11 && b.e == 7;
  });
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& item : items)
    if (!item.ok) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["ok"] = ok();
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : items) j["items"].push_back({{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table1", "lemma21", "gcd", "family", "products", "catalog"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport r;
  r.suite = name;
  if (name == "table1")
    table1(r);
  else if (name == "lemma21")
    lemma21(r);
  else if (name == "gcd")
    gcd_grid(r);
  else if (name == "family")
    family(r);
  else if (name == "products")
    products(r, options);
  else if (name == "catalog")
    catalog(r);
  else
    throw InvalidArgument("unknown suite '" + name + "'");
  return r;
}

}  // namespace hallskew
