#include "semimod/corpus.hpp"

#include <fstream>
#include <future>
#include <sstream>

#include "semimod/catalog.hpp"
#include "semimod/model_io.hpp"
#include "semimod/report.hpp"

#ifndef SEMIMOD_DEFAULT_CORPUS_DIR
#define SEMIMOD_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace semimod {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

class Expect {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::vector<std::string> failures;
};

json maps_json(const std::vector<LinearMap>& maps) {
  json out = json::array();
  for (const auto& f : maps) out.push_back(to_json(f));
  return out;
}

bool exact_everywhere(const ExactnessReport& r) {
  return r.exact && std::all_of(r.positions.begin(), r.positions.end(),
                                [](const PositionReport& p) { return p.exact; });
}

json item_b31_example(const fs::path& dir, Expect& e) {
  const auto model = parse_model_file(dir / "b31.json");
  const auto r = model.module("B31");
  const auto z2 = model.module("Z2");
  const auto iota = model.morphism("iota");
  const auto pi = model.morphism("pi");
  const auto f = model.morphism("f");

  const auto exactness = classify_exactness(model.sequence("ses"));
  e.require(exact_everywhere(exactness), "0 -> {0,2} -> B31 -> Z2 -> 0 is exact at every position");
  const auto ses = is_short_exact(iota, pi);
  e.require(ses.short_exact && ses.kernel_isomorphic.value_or(false) &&
                ses.quotient_isomorphic.value_or(false),
            "short exact with L = Ker(pi) and Z2 = B31/L");

  const auto split = find_splittings(iota, pi);
  e.require(split.left && split.left->map == f.map, "left splitting x -> 2 for x != 0");
  e.require(!split.right, "no right splitting");
  e.require(compose(f, iota).map == identity_map(iota.dom).map, "f . iota = id");

  const auto homs = enumerate_hom(z2, r);
  e.require(homs.size() == 1, "Hom(Z2, B31) has exactly one element");

  const auto q = quotient(Subsemimodule{r, kernel_image(iota).image});
  const bool q_iso = are_isomorphic(q.apex, z2);
  e.require(q_iso, "B31/{0,2} is isomorphic to Z2");

  const auto k_proj = relative_projectivity(z2, r, Flavor::k);
  e.require(!k_proj.verdict, "Z2 is not B31-k-projective");
  e.require(k_proj.witness && k_proj.witness->epimorphism.map == pi.map &&
                k_proj.witness->map && k_proj.witness->map->map == identity_map(z2).map,
            "k-projectivity witness is pi with g = id");
  const auto e_proj = relative_projectivity(r, r, Flavor::e);
  e.require(e_proj.verdict && e_proj.cross_check.value_or(false), "B31 is B31-e-projective");

  return {{"exactness", to_json(exactness)},
          {"short_exact", to_json(ses)},
          {"splittings", to_json(split)},
          {"hom_Z2_B31", maps_json(homs)},
          {"quotient", to_json(*q.apex)},
          {"quotient_isomorphic_to_Z2", q_iso},
          {"k_projectivity_Z2_B31", to_json(k_proj)},
          {"e_projectivity_B31_B31", to_json(e_proj)}};
}

// Claims of the B(3,1) example, evaluated on a candidate additive monoid.
json b31_claims(const Module& m) {
  const auto z2 = z2_monoid();
  json out;
  const ElementSet l{0, 2};
  const bool sub = is_subsemimodule(*m, l);
  out["{0,2} subtractive"] = sub && subtractive_closure(*m, l).is_subtractive;
  const auto pi = make_linear_map(m, z2, {0, 1, 0});
  out["pi linear"] = pi.ok();
  out["Hom(Z2,R) has one element"] = enumerate_hom(z2, m).size() == 1;
  if (sub && pi.ok()) {
    const auto iota = as_module(Subsemimodule{m, l}).second;
    const auto split = find_splittings(iota, *pi.value);
    out["sequence exact"] = classify_exactness({{iota, *pi.value}, true, true}).exact;
    out["left splitting"] = split.left.has_value();
    out["no right splitting"] = !split.right.has_value();
  } else {
    out["sequence exact"] = nullptr;
    out["left splitting"] = nullptr;
    out["no right splitting"] = nullptr;
  }
  return out;
}

bool all_true(const json& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const json& v) { return v == true; });
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (std::size_t i = 0; i < vs.size() && i < 3; ++i) out.push_back(to_json(vs[i]));
  return out;
}

// The literal table leaves 1+1 open; try every value.
json item_b31_table(const fs::path&, Expect& e) {
  json literal = json::array();
  std::vector<std::int64_t> monoids, semirings;
  bool monoid_fails_claims = true;
  for (std::int64_t c = 0; c < 3; ++c) {
    const std::vector<std::vector<std::int64_t>> add{{0, 1, 2}, {1, c, 1}, {2, 1, 0}};
    const auto ring = validate_semiring(
        RawSemiring{"B31-literal-" + std::to_string(c), add, {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}}, 0, 1});
    const auto monoid = validate_semimodule(ScalarDomain::naturals(),
                                            RawSemimodule{"B31-literal-" + std::to_string(c), add, std::nullopt});
    json entry{{"one_plus_one", c},
               {"semiring", ring.ok()},
               {"semiring_violations", violations_json(ring.violations)},
               {"monoid", monoid.ok()},
               {"monoid_violations", violations_json(monoid.violations)}};
    if (ring.ok()) semirings.push_back(c);
    if (monoid.ok()) {
      monoids.push_back(c);
      entry["claims"] = b31_claims(std::make_shared<const FiniteSemimodule>(*monoid.value));
      monoid_fails_claims = monoid_fails_claims && !all_true(entry["claims"]);
    }
    literal.push_back(entry);
  }
  const auto corrected = b31_claims(additive_monoid(b31_semiring()));
  e.require(semirings.empty(), "no completion of the literal tables is a semiring");
  e.require(monoids == std::vector<std::int64_t>{1}, "exactly one completion (1+1=1) is an associative addition");
  e.require(monoid_fails_claims, "the associative completion fails some claim of the example");
  e.require(all_true(corrected), "the corrected table satisfies every claim");

  const auto& b31 = *b31_semiring();
  return {{"literal_completions", literal},
          {"corrected", {{"semiring", semiring_json(b31)}, {"claims", corrected}}},
          {"note",
           "literal tables (1+2=1, 2+2=0, 2*2=0) admit no semiring completion; the only associative "
           "addition (1+1=1) breaks the example; corrected tables use 1+1=2, 2+2=2, 2*2=2"}};
}

json item_not_direct(const fs::path&, Expect& e) {
  const auto witness = rational_witness_check(not_direct_witness());
  const auto control = rational_witness_check(zero_control());
  const auto perturbed = rational_witness_check(perturbed_witness());
  e.require(witness.sums_equal && witness.components_differ && witness.memberships &&
                witness.certifies_not_direct,
            "displayed decompositions certify that E1 + N>=1 is not direct");
  e.require(control.sums_equal && !control.components_differ && !control.certifies_not_direct,
            "zero decomposition of the zero matrix is unique");
  e.require(!perturbed.sums_equal && !perturbed.certifies_not_direct,
            "perturbed summand breaks the equality");
  const auto d = not_direct_witness();
  return {{"decompositions",
           {{"k", to_json(d.k)}, {"l", to_json(d.l)}, {"k2", to_json(d.k2)}, {"l2", to_json(d.l2)}}},
          {"sum", to_json(d.k + d.l)},
          {"witness", to_json(witness)},
          {"control", to_json(control)},
          {"perturbed", to_json(perturbed)}};
}

json item_d_iso(const fs::path& dir, Expect& e) {
  const auto model = parse_model_file(dir / "bb.json");
  const auto bb = model.module("BB");
  const auto b = model.module("reg(B)");
  const ElementSet k = kernel_image(model.morphism("iota_K")).image;
  const ElementSet l{0, 1};
  const auto ds = is_direct_sum(*bb, k, l);
  e.require(ds.direct, "BB = K (+) L for K = B(+)0, L = 0(+)B");
  const auto q = quotient(Subsemimodule{bb, k});
  const bool iso = are_isomorphic(q.apex, b);
  e.require(iso, "BB/K is isomorphic to B");
  const auto complement = direct_complement(bb, k);
  e.require(complement && complement->elements == l, "the complement of K found by search is 0(+)B");
  const auto exactness = classify_exactness(model.sequence("split"));
  const auto split = find_splittings(model.morphism("iota_K"), model.morphism("pi_K"));
  e.require(exact_everywhere(exactness) && split.left && split.right, "0 -> K -> BB -> B -> 0 is split exact");
  return {{"K", k},
          {"L", l},
          {"direct", ds.direct},
          {"quotient", to_json(*q.apex)},
          {"quotient_isomorphic_to_B", iso},
          {"complement", complement ? json(complement->elements) : json(nullptr)},
          {"exactness", to_json(exactness)},
          {"splittings", to_json(split)}};
}

json item_reg_sub(const fs::path&, Expect& e) {
  const auto m = regular_module(b31_semiring());
  json rows = json::array();
  for (const auto& entry : enumerate_subsemimodules(m)) {
    const auto [l, iota] = as_module(entry.sub);
    const auto q = quotient(entry.sub);
    const auto r = classify_exactness({{iota, q.projection}, true, true});
    e.require(r.semi_exact, "0 -> L -> M -> M/L -> 0 is semi-exact");
    e.require(r.exact == entry.subtractive, "exact iff L subtractive");
    rows.push_back({{"L", entry.sub.elements},
                    {"subtractive", entry.subtractive},
                    {"proper_exact", r.proper_exact},
                    {"semi_exact", r.semi_exact},
                    {"exact", r.exact},
                    {"quotient_size", q.apex->size()}});
  }
  return {{"module", to_json(*m)}, {"subsemimodules", rows}};
}

json item_bb_nonnormal(const fs::path& dir, Expect& e) {
  const auto model = parse_model_file(dir / "bb.json");
  const auto bb = model.module("BB");
  const auto rho = generated_congruence(bb, {{2, 1}});
  e.require(rho.class_of == std::vector<Elem>{0, 1, 1, 1}, "classes {(0,0)} and {(1,0),(0,1),(1,1)}");
  const auto pi = model.morphism("pi_rho");
  e.require(pi.map == quotient(rho).projection.map, "fixture projection matches the quotient");
  const auto normality = classify_normality(pi);
  e.require(!normality.k_normal && normality.k_normal_witness, "projection is not k-normal");
  const auto r = classify_exactness(model.sequence("rho"));
  const auto& middle = r.positions.at(1);
  e.require(middle.proper_exact && !middle.exact, "proper-exact but not exact at BB");
  return {{"congruence", to_json(rho)},
          {"projection", to_json(normality)},
          {"exactness", to_json(r)}};
}

json item_ideal_simple(const fs::path&, Expect& e) {
  json simple = json::object();
  const std::vector<std::pair<std::string, bool>> expected{
      {"reg(B)", true}, {"reg(B31)", false}, {"Z2", true}, {"reg(F2)", true}, {"free(B,2)", false}};
  for (const auto& [name, want] : expected) {
    const auto r = is_ideal_simple(builtin_module(name));
    e.require(r.ideal_simple == want, name + (want ? " is ideal-simple" : " is not ideal-simple"));
    simple[name] = {{"ideal_simple", r.ideal_simple},
                    {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
  }
  json comp = json::object();
  for (const auto& name : {"B", "B31", "F2"}) {
    const auto c = comp_elements(*builtin_semiring(name));
    e.require(c == ElementSet{0, 1}, std::string("Comp(") + name + ") = {0,1}");
    comp[name] = c;
  }
  json cancellative = json::object();
  for (const auto& name : {"B", "B31", "F2"}) {
    const auto c = cancellative_elements(*builtin_semiring(name));
    cancellative[name] = {{"elements", c.elements}, {"cancellative", c.cancellative}};
  }
  return {{"ideal_simple", simple}, {"comp", comp}, {"cancellative", cancellative}};
}

struct ItemDef {
  const char* name;
  json (*run)(const fs::path&, Expect&);
};

const std::vector<ItemDef>& items() {
  static const std::vector<ItemDef> defs = {
      {"b31-example", item_b31_example},   {"b31-table-consistency", item_b31_table},
      {"not-direct", item_not_direct},     {"d-iso-BB", item_d_iso},
      {"reg-sub-B31", item_reg_sub},       {"bb-nonnormal", item_bb_nonnormal},
      {"ideal-simple", item_ideal_simple},
  };
  return defs;
}

CorpusItemResult run_item(const ItemDef& def, const fs::path& dir) {
  CorpusItemResult out;
  out.name = def.name;
  Expect e;
  try {
    out.report = def.run(dir, e);
  } catch (const std::exception& ex) {
    e.failures.push_back(std::string("error: ") + ex.what());
    out.report = nullptr;
  }
  out.failures = std::move(e.failures);
  return out;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

fs::path default_corpus_dir() { return SEMIMOD_DEFAULT_CORPUS_DIR; }

const std::vector<std::string>& corpus_item_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : items()) out.push_back(d.name);
    return out;
  }();
  return names;
}

CorpusResult corpus_verify(const fs::path& dir, bool write_goldens) {
  std::vector<std::future<CorpusItemResult>> pending;
  for (const auto& def : items()) {
    pending.push_back(std::async(std::launch::async, run_item, std::cref(def), dir));
  }
  CorpusResult out;
  for (auto& fut : pending) {
    auto item = fut.get();
    const auto golden_path = dir / "golden" / (item.name + ".json");
    const auto bytes = canonical_dump(item.report) + "\n";
    if (write_goldens) {
      fs::create_directories(golden_path.parent_path());
      std::ofstream(golden_path, std::ios::binary) << bytes;
      item.golden = "written";
    } else if (const auto golden = read_file(golden_path); !golden) {
      item.golden = "missing";
      item.failures.push_back("golden file missing");
    } else if (*golden != bytes) {
      item.golden = "drift";
      item.failures.push_back("report differs from golden");
    } else {
      item.golden = "match";
    }
    item.passed = item.failures.empty();
    out.passed = out.passed && item.passed;
    out.items.push_back(std::move(item));
  }
  return out;
}

json to_json(const CorpusItemResult& r) {
  return {{"name", r.name},
          {"passed", r.passed},
          {"failures", r.failures},
          {"golden", r.golden},
          {"report", r.report}};
}

json to_json(const CorpusResult& r) {
  json items = json::array();
  for (const auto& item : r.items) items.push_back(to_json(item));
  return {{"passed", r.passed}, {"items", items}};
}

}  // namespace semimod
