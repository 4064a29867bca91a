#include "hallskew/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hallskew/errors.hpp"
#include "hallskew/factorization.hpp"
#include "hallskew/maps.hpp"
#include "hallskew/numth.hpp"
#include "hallskew/skew.hpp"
#include "hallskew/suites.hpp"
#include "hallskew/zoo.hpp"

namespace hallskew {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::optional<std::uint64_t> bound_index;
  std::optional<std::uint64_t> bound_darts;
  bool full = false;
  std::string format = "json";
};

// Result of one subcommand: the text for standard output and the exit code.
struct Outcome {
  std::string text;
  int code = 0;
};

Outcome emit(const Json& j, bool ok = true) { return {j.dump(2) + "\n", ok ? 0 : 1}; }

std::string dec(const BigInt& x) { return x.str(); }

Json perm_json(const Permutation& p) { return p.to_string(); }

Json generators_json(const PermGroup& g) {
  Json a = Json::array();
  for (const auto& x : g.generators()) a.push_back(perm_json(x));
  return a;
}

// "stab:i" (0-based point), a descriptor, or generators "(..);(..)".
PermGroup parse_subgroup(const std::string& text, const PermGroup& group) {
  if (text.rfind("stab:", 0) == 0) {
    std::uint32_t point = 0;
    const std::string arg = text.substr(5);
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), point);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty())
      throw InvalidArgument("bad stabilizer point '" + arg + "'");
    if (point >= group.degree()) throw InvalidArgument("stabilizer point out of range");
    return point_stabilizer(group, point);
  }
  std::vector<Permutation> gens;
  if (!text.empty() && text.front() == '(') {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ';'))
      if (!part.empty()) gens.push_back(Permutation::parse(part, group.degree()));
    return PermGroup(group.degree(), gens);
  }
  const PermGroup sub = make_group(GroupDescriptor::parse(text));
  if (sub.degree() > group.degree()) throw InvalidArgument("subgroup '" + text + "' acts on more points than the group");
  for (const auto& x : sub.generators()) gens.push_back(x.extended(group.degree()));
  return PermGroup(group.degree(), gens);
}

// "singer", "table1" or a permutation in cycle notation.
Permutation parse_k(const std::string& text, const GroupDescriptor& desc, const PermGroup& group) {
  if (text == "singer") {
    if (desc.kind != GroupDescriptor::Kind::PSL) throw InvalidArgument("--k singer needs a psl:d,q group");
    return singer_cycle(desc.a, desc.b);
  }
  if (text == "table1") return table1_triple(desc).k;
  return Permutation::parse(text, group.degree());
}

// First element of G, in enumeration order, completing H to a factorization
// with a core-free cyclic factor.
std::optional<Permutation> search_k(const PermGroup& group, const PermGroup& sub) {
  if (group.order() % sub.order() != 0) return std::nullopt;
  const BigInt index = group.order() / sub.order();
  std::optional<Permutation> found;
  group.for_each_element([&](const Permutation& x) {
    if (BigInt(x.order()) != index) return true;
    for (std::uint64_t j = 1; j < x.order(); ++j)
      if (sub.contains(x.pow(static_cast<std::int64_t>(j)))) return true;
    if (!cyclic_core_free(group, x)) return true;
    found = x;
    return false;
  });
  return found;
}

Json shape_json(const ShapeReport& s) {
  Json j;
  j["shape"] = s.shape;
  j["hall"] = s.hall;
  j["nOrder"] = dec(s.n_order);
  j["quotientOrder"] = dec(s.quotient_order);
  j["kBarOrder"] = dec(s.k_bar_order);
  if (s.shape == 1) {
    j["kBarNormal"] = s.k_bar_normal;
    j["complementOrder"] = dec(s.complement_order);
    j["complementFaithful"] = s.complement_faithful;
  }
  if (s.shape == 2 || !s.factors.empty()) {
    j["factors"] = Json::array();
    for (const auto& f : s.factors)
      j["factors"].push_back({{"order", dec(f.order)},
                              {"simple", f.simple},
                              {"profile", f.profile ? Json(f.profile->to_string()) : Json(nullptr)}});
    j["compatible"] = s.compatible;
  }
  j["detail"] = s.detail;
  return j;
}

Json factorization_json(const Factorization& f) {
  Json j;
  j["groupOrder"] = dec(f.G().order());
  j["hOrder"] = dec(f.H().order());
  j["kOrder"] = std::to_string(f.k_order());
  j["k"] = perm_json(f.k());
  j["hall"] = f.is_hall();
  j["coreFree"] = f.k_core_free();
  j["hCoreOrder"] = f.h_core_order() ? Json(dec(*f.h_core_order())) : Json(nullptr);
  return j;
}

void require_json(const Globals& g, const char* what) {
  if (g.format != "json") throw InvalidArgument(std::string(what) + " supports only --format json");
}

// group -------------------------------------------------------------------------

struct GroupArgs {
  std::string group;
  bool involutions = false;
};

Outcome cmd_group(const GroupArgs& a, const Globals& g) {
  require_json(g, "group");
  const GroupDescriptor desc = GroupDescriptor::parse(a.group);
  const PermGroup group = make_group(desc);
  Json j;
  j["group"] = desc.to_string();
  j["degree"] = group.degree();
  j["order"] = dec(group.order());
  j["generators"] = generators_json(group);
  if (a.involutions) j["involutions"] = dec(count_involutions(group));
  return emit(j);
}

// factorize ---------------------------------------------------------------------

struct FactorizeArgs {
  std::string group, sub, k;
  bool shape = false;
};

Outcome cmd_factorize(const FactorizeArgs& a, const Globals& g) {
  require_json(g, "factorize");
  const GroupDescriptor desc = GroupDescriptor::parse(a.group);
  const PermGroup group = make_group(desc);
  const PermGroup sub = parse_subgroup(a.sub, group);
  const Permutation k = parse_k(a.k, desc, group);
  const std::uint64_t index_bound = g.bound_index.value_or(kDefaultIndexBound);
  Json j;
  j["group"] = desc.to_string();
  j["sub"] = a.sub;
  try {
    const Factorization f = certify_factorization(group, sub, k, index_bound);
    j["factorization"] = true;
    j.update(factorization_json(f));
    if (a.shape) j["shape"] = shape_json(shape_check(f, index_bound));
  } catch (const NotAFactorization& e) {
    j["factorization"] = false;
    j["reason"] = e.what();
    return emit(j, false);
  }
  return emit(j);
}

// skew --------------------------------------------------------------------------

struct SkewArgs {
  std::string via, sub, k;
  bool enumerate = false;
};

Outcome cmd_skew(const SkewArgs& a, const Globals& g) {
  require_json(g, "skew");
  const GroupDescriptor desc = GroupDescriptor::parse(a.via);
  PermGroup group, sub;
  Permutation k;
  if (a.sub.empty()) {
    const Table1Triple t = table1_triple(desc);
    group = t.G;
    sub = t.H;
    k = t.k;
  } else {
    group = make_group(desc);
    sub = parse_subgroup(a.sub, group);
  }
  if (!a.k.empty()) {
    k = parse_k(a.k, desc, group);
  } else if (!a.sub.empty()) {
    auto found = search_k(group, sub);
    if (!found) throw InvalidArgument("no element of " + desc.to_string() + " completes " + a.sub + " to a skew product");
    k = *found;
  }
  Json j;
  j["via"] = desc.to_string();
  j["H"] = a.sub.empty() ? Json("table1") : Json(a.sub);
  j["k"] = perm_json(k);
  const Factorization f = certify_factorization(group, sub, k, g.bound_index.value_or(kDefaultIndexBound));
  if (!f.k_core_free()) {
    j["coreFree"] = false;
    return emit(j, false);
  }
  const SkewFromFactorization r = skew_from_factorization(f);
  const SkewMorphism& s = r.skew;
  const AxiomCheck axioms = verify_axioms(s);
  j["hOrder"] = std::to_string(s.size());
  j["order"] = s.order();
  j["trivial"] = s.trivial();
  j["hall"] = is_hall_skew(s);
  j["faithful"] = r.faithful;
  j["axioms"] = {{"ok", axioms.ok}, {"exhaustive", axioms.exhaustive}};
  if (!axioms.ok) j["axioms"]["failure"] = axioms.failure;
  bool ok = axioms.ok;
  if (a.enumerate) {
    const std::vector<SkewMorphism> all = brute_enumerate(s.base());
    bool found = false;
    for (const auto& t : all) {
      bool same = true;
      for (std::uint64_t i = 0; i < s.size() && same; ++i)
        same = t.element(t.rho()[t.index_of(s.element(i))]) == s.element(s.rho()[i]);
      found = found || same;
    }
    const auto automorphisms = std::count_if(all.begin(), all.end(), [](const SkewMorphism& t) { return t.trivial(); });
    j["enumerated"] = {{"count", all.size()}, {"automorphisms", automorphisms}, {"containsThis", found}};
    ok = ok && found;
  }
  return emit(j, ok);
}

// map ---------------------------------------------------------------------------

struct MapArgs {
  std::string group, rho, z;
  bool outer = false;
  std::vector<std::string> factors;
  std::size_t twisted = 0;
};

RotaryPair map_pair(const MapArgs& a) {
  if (a.group.empty()) throw InvalidArgument("--group is required");
  const GroupDescriptor desc = GroupDescriptor::parse(a.group);
  if (a.rho.empty() != a.z.empty()) throw InvalidArgument("--rho and --z go together");
  if (a.rho.empty()) return example_rotary_pair(desc, a.outer);
  const PermGroup group = a.outer ? example_rotary_pair(desc, true).G : make_group(desc);
  return make_rotary_pair(group, Permutation::parse(a.rho, group.degree()), Permutation::parse(a.z, group.degree()));
}

Json pair_json(const MapArgs& a, const RotaryPair& p) {
  Json j;
  j["group"] = GroupDescriptor::parse(a.group).to_string();
  j["outer"] = a.outer;
  j["order"] = dec(p.G.order());
  j["rho"] = perm_json(p.rho);
  j["z"] = perm_json(p.z);
  j["rhoOrder"] = p.rho_order;
  return j;
}

Outcome cmd_map_surface(const MapArgs& a, const Globals& g, RotationMap::Kind kind) {
  require_json(g, "map rota/biro");
  const RotaryPair p = map_pair(a);
  const RotationMap m = build_map(p, kind, g.bound_darts.value_or(kDefaultDartBound));
  Json j = pair_json(a, p);
  j.update(Json::parse(m.to_json()));
  return emit(j);
}

Outcome cmd_map_graph(const MapArgs& a, const Globals& g) {
  const RotaryPair p = map_pair(a);
  const CosetGraph cg = coset_graph(p, g.bound_index.value_or(kDefaultVertexBound));
  if (g.format == "dot") {
    std::vector<std::string> labels;
    for (const auto& r : cg.representatives) labels.push_back(r.to_string());
    return {cg.graph.to_dot(labels), 0};
  }
  Json j = pair_json(a, p);
  j["graph"] = Json::parse(cg.graph.to_json());
  const auto degree = cg.graph.regular_degree();
  j["regularDegree"] = degree ? Json(*degree) : Json(nullptr);
  return emit(j);
}

Outcome cmd_map_decompose(const MapArgs& a, const Globals& g) {
  require_json(g, "map decompose");
  if (a.factors.empty()) throw InvalidArgument("--factors needs at least one descriptor");
  std::vector<GroupDescriptor> factors;
  for (const auto& f : a.factors) factors.push_back(GroupDescriptor::parse(f));
  DecompositionOptions options;
  options.full = g.full;
  const DecompositionReport r = verify_decomposition(factors, a.twisted, {}, options);
  Json j;
  j["factors"] = Json::array();
  for (const auto& f : factors) j["factors"].push_back(f.to_string());
  j["twisted"] = a.twisted;
  j["ok"] = r.ok;
  j["sampled"] = r.sampled;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["productVertices"] = r.product_vertices;
  j["productEdges"] = r.product_edges;
  j["checked"] = r.checked;
  j["rhoOrder"] = r.rho_order;
  if (!r.ok) j["failure"] = r.failure;
  return emit(j, r.ok);
}

// numth -------------------------------------------------------------------------

struct NumthArgs {
  std::string group;
  std::vector<std::string> groups;
  std::uint64_t d = 0, q = 0, p = 0, e = 0, f = 0;
  std::uint64_t cutoff = kDefaultFamilyCutoff;
  std::uint32_t max_d = 3;
  std::uint64_t max_q = 16;
  std::size_t r = 2, limit = 100;
};

Outcome cmd_numth_e(const NumthArgs& a) {
  const GroupDescriptor desc = GroupDescriptor::parse(a.group);
  const SimpleFactorProfile prof = profile(desc);
  return emit({{"group", desc.to_string()}, {"order", dec(prof.order)}, {"e", dec(prof.e)}});
}

Outcome cmd_numth_gcd(const NumthArgs& a) {
  if (a.d > 0xffffffffu) throw InvalidArgument("--d out of range");
  const GcdIdentityReport r = gcd_identity(static_cast<std::uint32_t>(a.d), a.q);
  Json j{{"d", a.d}, {"q", a.q}, {"ok", r.ok}, {"e", dec(r.e)}};
  j["gcds"] = Json::array();
  for (const auto& [jj, v] : r.gcds) j["gcds"].push_back({{"j", jj}, {"gcd", dec(v)}});
  j["congruence"] = r.congruence;
  j["stabilizerGcd"] = dec(r.stabilizer_gcd);
  return emit(j, r.ok);
}

Outcome cmd_numth_family(const NumthArgs& a) {
  const PrimeFamilyReport r = prime_family(a.p, a.d, a.cutoff);
  Json j{{"p", a.p}, {"d", a.d}, {"family", r.family}, {"ok", r.ok}};
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"ok", c.ok}});
  j["coprime"] = Json::array();
  for (const auto& [prime, ok] : r.coprime) j["coprime"].push_back({{"d", prime}, {"ok", ok}});
  return emit(j, r.ok);
}

Outcome cmd_numth_compatible(const NumthArgs& a) {
  std::vector<SimpleFactorProfile> profiles;
  Json j;
  j["groups"] = Json::array();
  for (const auto& text : a.groups) {
    const GroupDescriptor desc = GroupDescriptor::parse(text);
    profiles.push_back(profile(desc));
    j["groups"].push_back({{"group", desc.to_string()}, {"order", dec(profiles.back().order)}, {"e", dec(profiles.back().e)}});
  }
  const Compatibility c = hyp1_compatible(profiles);
  j["ok"] = c.ok;
  j["violation"] = c.violation ? Json::array({c.violation->first, c.violation->second}) : Json(nullptr);
  return emit(j, c.ok);
}

Outcome cmd_numth_tuples(const NumthArgs& a) {
  Json j{{"maxD", a.max_d}, {"maxQ", a.max_q}, {"r", a.r}};
  j["tuples"] = Json::array();
  for (const auto& tuple : compatible_linear_tuples(a.max_d, a.max_q, a.r, a.limit)) {
    Json t = Json::array();
    for (const auto& d : tuple) t.push_back(d.to_string());
    j["tuples"].push_back(t);
  }
  return emit(j);
}

// verify ------------------------------------------------------------------------

Outcome cmd_verify(const std::string& name, const Globals& g) {
  require_json(g, "verify");
  SuiteOptions options;
  options.full = g.full;
  const SuiteReport r = run_suite(name, options);
  return {r.to_json() + "\n", r.ok() ? 0 : 1};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall factorizations, skew-morphisms and rotary maps"};
  app.name("hallskew");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--bound-index", g.bound_index, "Largest coset index or coset-graph size to build");
  app.add_option("--bound-darts", g.bound_darts, "Largest group order for map construction");
  app.add_flag("--full", g.full, "Full checks instead of sampling");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  std::function<Outcome()> action;

  GroupArgs ga;
  auto* group = app.add_subcommand("group", "Build a group and report its order");
  group->add_option("--group", ga.group, "Group descriptor, e.g. psl:3,2")->required();
  group->add_flag("--involutions", ga.involutions, "Count involutions");
  group->callback([&] { action = [&] { return cmd_group(ga, g); }; });

  FactorizeArgs fa;
  auto* factorize = app.add_subcommand("factorize", "Certify G = H<k>");
  factorize->add_option("--group", fa.group, "Group descriptor")->required();
  factorize->add_option("--sub", fa.sub, "stab:i (0-based), a descriptor, or generators (..);(..)")->required();
  factorize->add_option("--k", fa.k, "singer, table1, or a permutation in cycle notation")->required();
  factorize->add_flag("--shape", fa.shape, "Also report the structural shape");
  factorize->callback([&] { action = [&] { return cmd_factorize(fa, g); }; });

  SkewArgs sa;
  auto* skew = app.add_subcommand("skew", "Skew-morphism of H from a factorization of G");
  skew->add_option("--via", sa.via, "Group descriptor for G")->required();
  skew->add_option("--H", sa.sub, "Subgroup as for factorize --sub; default: the catalog triple");
  skew->add_option("--k", sa.k, "Complement generator; default: catalog or first suitable element");
  skew->add_flag("--enumerate", sa.enumerate, "Check membership in the brute-force enumeration of H");
  skew->callback([&] { action = [&] { return cmd_skew(sa, g); }; });

  MapArgs ma;
  auto* map = app.add_subcommand("map", "Rotary pairs, maps and coset graphs");
  map->require_subcommand(1);
  auto pair_options = [&](CLI::App* sub) {
    sub->add_option("--group", ma.group, "Group descriptor")->required();
    sub->add_flag("--outer", ma.outer, "Use the outer example pair");
    sub->add_option("--rho", ma.rho, "Rotation, cycle notation");
    sub->add_option("--z", ma.z, "Involution, cycle notation");
  };
  auto* rota = map->add_subcommand("rota", "Rotary map");
  pair_options(rota);
  rota->callback([&] { action = [&] { return cmd_map_surface(ma, g, RotationMap::Kind::Rotary); }; });
  auto* biro = map->add_subcommand("biro", "Bi-rotary map");
  pair_options(biro);
  biro->callback([&] { action = [&] { return cmd_map_surface(ma, g, RotationMap::Kind::Birotary); }; });
  auto* graph = map->add_subcommand("graph", "Coset graph Cos(G, <rho>, <rho> z <rho>)");
  pair_options(graph);
  graph->callback([&] { action = [&] { return cmd_map_graph(ma, g); }; });
  auto* decompose = map->add_subcommand("decompose", "Check the product decomposition of a coset graph");
  decompose->add_option("--factors", ma.factors, "Simple factor descriptors")->required();
  decompose->add_option("--twisted", ma.twisted, "Number of leading factors twisted by their outer involution");
  decompose->callback([&] { action = [&] { return cmd_map_decompose(ma, g); }; });

  NumthArgs na;
  auto* numth = app.add_subcommand("numth", "Number-theoretic checks");
  numth->require_subcommand(1);
  auto* e = numth->add_subcommand("e", "Order of the cyclic factor e(T)");
  e->add_option("--group", na.group, "Simple group descriptor")->required();
  e->callback([&] { action = [&] { return cmd_numth_e(na); }; });
  auto* gcd = numth->add_subcommand("gcd", "gcd identity for PSL(d,q)");
  gcd->add_option("--d", na.d, "Prime dimension")->required();
  gcd->add_option("--q", na.q, "Prime power")->required();
  gcd->callback([&] { action = [&] { return cmd_numth_gcd(na); }; });
  auto* family = numth->add_subcommand("family", "Prime family between d and d^2");
  family->add_option("--p", na.p, "Characteristic")->required();
  family->add_option("--d", na.d, "Prime")->required();
  family->add_option("--cutoff", na.cutoff, "Exponent cutoff for the gcd checks");
  family->callback([&] { action = [&] { return cmd_numth_family(na); }; });
  auto* solvable = numth->add_subcommand("solvable", "Solvable-case condition on f");
  solvable->add_option("--f", na.f, "Exponent")->required();
  solvable->callback([&] {
    action = [&] { return emit({{"f", na.f}, {"ok", solvable_f_ok(na.f)}}, solvable_f_ok(na.f)); };
  });
  auto* psl2pair = numth->add_subcommand("psl2pair", "Infeasibility of a PSL(2,2^e) x PSL(2,2^f) pair");
  psl2pair->add_option("--e", na.e, "First exponent")->required();
  psl2pair->add_option("--f", na.f, "Second exponent")->required();
  psl2pair->callback([&] {
    action = [&] {
      const bool infeasible = psl2_pair_infeasible(na.e, na.f);
      return emit({{"e", na.e}, {"f", na.f}, {"infeasible", infeasible}}, infeasible);
    };
  });
  auto* compatible = numth->add_subcommand("compatible", "Pairwise compatibility of simple factors");
  compatible->add_option("groups", na.groups, "Simple group descriptors")->required();
  compatible->callback([&] { action = [&] { return cmd_numth_compatible(na); }; });
  auto* tuples = numth->add_subcommand("tuples", "Search compatible tuples of linear groups");
  tuples->add_option("--max-d", na.max_d, "Largest prime dimension");
  tuples->add_option("--max-q", na.max_q, "Largest field size");
  tuples->add_option("--r", na.r, "Tuple length");
  tuples->add_option("--limit", na.limit, "Most tuples to report");
  tuples->callback([&] { action = [&] { return cmd_numth_tuples(na); }; });
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->callback([&] { action = [&] { return cmd_verify(suite, g); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    err << "error: " << e.what() << "\n" << target->help();
    return 2;
  }

  try {
    const Outcome o = action();
    out << o.text;
    out.flush();
    return o.code;
  } catch (const Error& e) {
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    err << "error: " << e.what() << "\n" << target->help();
    return 2;
  }
}

}  // namespace hallskew
