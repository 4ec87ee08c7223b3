#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "semimod/catalog.hpp"
#include "semimod/corpus.hpp"
#include "semimod/laws.hpp"
#include "semimod/model_io.hpp"
#include "semimod/report.hpp"
#include "semimod/universe.hpp"

namespace semimod::cli {

using json = nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model_path;
  std::string p, m, map, module, subset, pairs, f, g, seq, out, dir;
  std::string suite = "all";
  std::string flavor = "e";
  std::size_t samples = 0;
  std::size_t n_max = 3;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  bool global = false;
  bool verify = false;
  bool write_goldens = false;
};

struct Outcome {
  json result;
  int code = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Elem parse_elem(const std::string& s, const FiniteSemimodule& m) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an element index: '" + s + "'");
  }
  if (pos != s.size() || v >= m.size()) {
    throw UsageError("element '" + s + "' out of range for " + m.name + " (size " +
                     std::to_string(m.size()) + ")");
  }
  return static_cast<Elem>(v);
}

ElementSet parse_subset(const std::string& s, const FiniteSemimodule& m) {
  ElementSet out;
  for (const auto& part : split(s, ',')) out.push_back(parse_elem(part, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Elem, Elem>> parse_pairs(const std::string& s, const FiniteSemimodule& m) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& part : split(s, ',')) {
    const auto ab = split(part, ':');
    if (ab.size() != 2) throw UsageError("pairs are written a:b, got '" + part + "'");
    out.emplace_back(parse_elem(ab[0], m), parse_elem(ab[1], m));
  }
  return out;
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value;
}

Model load(const Options& o) { return o.model_path.empty() ? Model{} : parse_model_file(o.model_path); }

std::pair<LinearMap, LinearMap> pair_of_maps(const Model& model, const Options& o) {
  if (!o.seq.empty()) {
    const auto seq = model.sequence(o.seq);
    if (seq.maps.size() != 2) throw UsageError("sequence '" + o.seq + "' must have exactly two maps");
    return {seq.maps[0], seq.maps[1]};
  }
  return {model.morphism(need(o.f, "--f")), model.morphism(need(o.g, "--g"))};
}

Flavor flavor_of(const Options& o) {
  const auto f = parse_flavor(o.flavor);
  if (!f) throw UsageError("unknown flavor '" + o.flavor + "' (plain, k, e, normally)");
  return *f;
}

std::vector<Module> search_universe(std::size_t n_max) {
  auto out = commutative_monoids(n_max);
  for (auto& m : boolean_semimodules(n_max)) out.push_back(m);
  return out;
}

Outcome cmd_validate(const Options& o) {
  try {
    const auto model = parse_model_file(need(o.model_path, "model file"));
    return {{{"valid", true},
             {"semirings", model.semirings.size()},
             {"semimodules", model.semimodules.size()},
             {"morphisms", model.morphisms.size()},
             {"sequences", model.sequences.size()},
             {"canonical", serialize_model(model)}},
            0};
  } catch (const ModelError& e) {
    return {{{"valid", false}, {"errors", e.errors()}}, 2};
  }
}

Outcome cmd_hom(const Options& o) {
  const auto model = load(o);
  const auto homs = enumerate_hom(model.module(need(o.p, "--P")), model.module(need(o.m, "--M")), o.budget);
  json maps = json::array();
  for (const auto& h : homs) maps.push_back(to_json(h));
  return {{{"P", o.p}, {"M", o.m}, {"count", homs.size()}, {"maps", maps}}, 0};
}

Outcome cmd_kernel(const Options& o) {
  const auto model = load(o);
  const auto f = model.morphism(need(o.map, "--map"));
  const auto ki = kernel_image(f);
  return {{{"map", to_json(f)},
           {"kernel", ki.kernel},
           {"image", ki.image},
           {"normality", to_json(classify_normality(f))}},
          0};
}

Outcome cmd_closure(const Options& o) {
  const auto model = load(o);
  const auto m = model.module(need(o.module, "--module"));
  const auto subset = parse_subset(o.subset, *m);
  const auto c = subtractive_closure(*m, subset);
  return {{{"module", m->name},
           {"subset", subset},
           {"closure", c.closure},
           {"subtractive", c.is_subtractive},
           {"is_subsemimodule", is_subsemimodule(*m, subset)},
           {"generated", generated_subsemimodule(m, subset).elements}},
          0};
}

Outcome cmd_quotient(const Options& o) {
  const auto model = load(o);
  const auto m = model.module(need(o.module, "--module"));
  if (o.subset.empty() == o.pairs.empty()) throw UsageError("give exactly one of --subset and --pairs");
  Quotient q;
  json source;
  if (!o.subset.empty()) {
    const auto subset = parse_subset(o.subset, *m);
    if (!is_subsemimodule(*m, subset)) throw UsageError("--subset is not a subsemimodule of " + m->name);
    q = quotient(Subsemimodule{m, subset});
    source = {{"subset", subset}};
  } else {
    const auto pairs = parse_pairs(o.pairs, *m);
    q = quotient(generated_congruence(m, pairs));
    source = {{"pairs", pairs}};
  }
  return {{{"module", m->name},
           {"source", source},
           {"congruence", to_json(q.congruence)},
           {"quotient", to_json(*q.apex)},
           {"projection", to_json(q.projection)},
           {"normality", to_json(classify_normality(q.projection))}},
          0};
}

Outcome cmd_pullback(const Options& o) {
  const auto model = load(o);
  const auto pb = pullback(model.morphism(need(o.f, "--f")), model.morphism(need(o.g, "--g")));
  return {to_json(pb), 0};
}

Outcome cmd_pushout(const Options& o, bool c_variant) {
  const auto model = load(o);
  const Span span{model.morphism(need(o.f, "--f")), model.morphism(need(o.g, "--g"))};
  const auto po = pushout(span);
  if (c_variant) {
    const auto cp = c_pushout(span);
    return {{{"c_pushout", to_json(cp)}, {"equals_pushout", cp.rho == po.rho}}, 0};
  }
  json result{{"pushout", to_json(po)}};
  if (!o.verify) return {result, 0};
  std::vector<Module> targets;
  for (const auto& t : search_universe(4)) {
    if (t->scalars == span.f.dom->scalars) targets.push_back(t);
  }
  const auto cocones = cocone_catalog(span, po, targets, o.budget);
  const auto check = verify_pushout_universal(span, po.legs, cocones, o.budget);
  result["universal"] = to_json(check);
  return {result, check.passed ? 0 : 1};
}

Outcome cmd_check_exact(const Options& o) {
  const auto model = load(o);
  json result;
  if (!o.seq.empty()) {
    const auto seq = model.sequence(o.seq);
    result["exactness"] = to_json(classify_exactness(seq));
    if (seq.maps.size() == 2 && seq.zero_left && seq.zero_right) {
      result["short_exact"] = to_json(is_short_exact(seq.maps[0], seq.maps[1], true, o.budget));
    }
  } else {
    const auto [f, g] = pair_of_maps(model, o);
    const auto ses = is_short_exact(f, g, true, o.budget);
    result["exactness"] = to_json(ses.exactness);
    result["short_exact"] = to_json(ses);
  }
  return {result, 0};
}

Outcome cmd_splittings(const Options& o) {
  const auto model = load(o);
  const auto [f, g] = pair_of_maps(model, o);
  return {to_json(find_splittings(f, g, o.budget)), 0};
}

Outcome cmd_projective(const Options& o) {
  const auto model = load(o);
  const auto flavor = flavor_of(o);
  const auto p = model.module(need(o.p, "--P"));
  if (o.global) {
    return {to_json(bounded_global_projectivity(p, search_universe(o.n_max), o.n_max, flavor, o.budget)), 0};
  }
  const auto m = model.module(need(o.m, "--M"));
  return {to_json(relative_projectivity(p, m, flavor, true, o.budget)), 0};
}

Outcome cmd_laws(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = law_suite_names();
  } else {
    const auto& known = law_suite_names();
    if (std::find(known.begin(), known.end(), o.suite) == known.end()) {
      throw UsageError("unknown suite '" + o.suite + "'");
    }
    names.push_back(o.suite);
  }
  LawOptions options;
  options.samples = o.samples;
  options.seed = o.seed;
  options.budget = o.budget;
  json suites = json::array();
  bool passed = true;
  for (const auto& name : names) {
    const auto r = run_law_suite(name, options);
    passed = passed && r.passed;
    suites.push_back(to_json(r));
  }
  return {{{"passed", passed}, {"suites", suites}}, passed ? 0 : 1};
}

Outcome cmd_corpus(const Options& o) {
  const auto dir = o.dir.empty() ? default_corpus_dir() : std::filesystem::path(o.dir);
  const auto r = corpus_verify(dir, o.write_goldens);
  return {to_json(r), r.passed ? 0 : 1};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sub->add_option("--budget", o.budget, "Enumeration budget")->capture_default_str();
  sub->add_option("--out", o.out, "Write the report to this file instead of standard output");
}

void add_model(CLI::App* sub, Options& o, bool required = false) {
  auto* opt = sub->add_option("model", o.model_path, "Model file (JSON)");
  if (required) opt->required();
}

}  // namespace

int exec_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite semimodule toolkit", "semimod"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::map<std::string, std::function<Outcome()>> handlers;
  auto command = [&](const char* name, const char* help, std::function<Outcome()> run) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    handlers[name] = std::move(run);
    return sub;
  };

  auto* validate = command("validate", "Load and validate a model file", [&] { return cmd_validate(o); });
  add_model(validate, o, true);

  auto* hom = command("hom", "Enumerate Hom(P, M)", [&] { return cmd_hom(o); });
  add_model(hom, o);
  hom->add_option("--P", o.p, "Source semimodule")->required();
  hom->add_option("--M", o.m, "Target semimodule")->required();

  auto* kernel = command("kernel", "Kernel, image and normality of a morphism", [&] { return cmd_kernel(o); });
  add_model(kernel, o, true);
  kernel->add_option("--map", o.map, "Morphism name")->required();

  auto* closure = command("closure", "Subtractive closure of a subset", [&] { return cmd_closure(o); });
  add_model(closure, o);
  closure->add_option("--module", o.module, "Semimodule")->required();
  closure->add_option("--subset", o.subset, "Comma-separated element indices")->required();

  auto* quot = command("quotient", "Bourne quotient or quotient by generated congruence",
                       [&] { return cmd_quotient(o); });
  add_model(quot, o);
  quot->add_option("--module", o.module, "Semimodule")->required();
  quot->add_option("--subset", o.subset, "Subsemimodule, comma-separated");
  quot->add_option("--pairs", o.pairs, "Generating pairs a:b,c:d");

  auto* pb = command("pullback", "Pullback of f: A -> N and g: B -> N", [&] { return cmd_pullback(o); });
  add_model(pb, o, true);
  pb->add_option("--f", o.f, "First morphism")->required();
  pb->add_option("--g", o.g, "Second morphism")->required();

  auto* po = command("pushout", "Pushout of f: L -> M and g: L -> N", [&] { return cmd_pushout(o, false); });
  add_model(po, o, true);
  po->add_option("--f", o.f, "First morphism")->required();
  po->add_option("--g", o.g, "Second morphism")->required();
  po->add_flag("--verify", o.verify, "Check the universal property against the cocone catalog");

  auto* cpo = command("c-pushout", "C-pushout of f: L -> M and g: L -> N", [&] { return cmd_pushout(o, true); });
  add_model(cpo, o, true);
  cpo->add_option("--f", o.f, "First morphism")->required();
  cpo->add_option("--g", o.g, "Second morphism")->required();

  auto* exact = command("check-exact", "Classify exactness of a sequence", [&] { return cmd_check_exact(o); });
  add_model(exact, o, true);
  exact->add_option("--seq", o.seq, "Sequence name");
  exact->add_option("--f", o.f, "First morphism of 0 -> L -> M -> N -> 0");
  exact->add_option("--g", o.g, "Second morphism of 0 -> L -> M -> N -> 0");

  auto* split_cmd = command("splittings", "Left and right splittings of a short sequence",
                            [&] { return cmd_splittings(o); });
  add_model(split_cmd, o, true);
  split_cmd->add_option("--seq", o.seq, "Sequence name (two maps)");
  split_cmd->add_option("--f", o.f, "First morphism");
  split_cmd->add_option("--g", o.g, "Second morphism");

  auto* proj = command("projective", "Relative or bounded global projectivity", [&] { return cmd_projective(o); });
  add_model(proj, o);
  proj->add_option("--P", o.p, "Candidate projective")->required();
  proj->add_option("--M", o.m, "Target semimodule");
  proj->add_option("--flavor", o.flavor, "plain, k, e or normally")->capture_default_str();
  proj->add_flag("--global", o.global, "Sweep the bounded universe instead of one target");
  proj->add_option("--n-max", o.n_max, "Universe size bound for --global")->capture_default_str();

  auto* laws = command("laws", "Run property suites", [&] { return cmd_laws(o); });
  laws->add_option("--suite", o.suite, "Suite name or 'all'")->capture_default_str();
  laws->add_option("--samples", o.samples, "Sample count (0 = suite default)")->capture_default_str();

  auto* corpus = command("corpus", "Verify the example corpus against goldens", [&] { return cmd_corpus(o); });
  corpus->add_option("--dir", o.dir, "Corpus directory");
  corpus->add_flag("--write-goldens", o.write_goldens, "Rewrite golden reports");

  std::vector<std::string> argv_store{"semimod"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto* chosen = app.get_subcommands().front();
  Outcome outcome;
  try {
    outcome = handlers.at(chosen->get_name())();
  } catch (const ModelError& e) {
    for (const auto& msg : e.errors()) err << "error: " << msg << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto text = canonical_dump(report_envelope(chosen->get_name(), outcome.result, o.seed, o.budget)) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    file << text;
  }
  return outcome.code;
}

}  // namespace semimod::cli
