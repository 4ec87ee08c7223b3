#include "semimod/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "semimod/catalog.hpp"

namespace semimod {

using nlohmann::json;

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "model has " + std::to_string(errors.size()) + " error(s)";
  for (const auto& e : errors) out += "\n  " + e;
  return out;
}

std::string escape(const std::string& token) {
  std::string out;
  for (const char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string ptr(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += "/" + escape(p);
  return out;
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {}

  Model run() {
    if (!doc_.is_object()) {
      error("", "model must be a JSON object");
      throw ModelError(errors_);
    }
    for (const auto& [key, value] : doc_.items()) {
      static const std::set<std::string> known{"format", "semirings", "semimodules", "morphisms",
                                               "sequences"};
      if (!known.count(key)) error(ptr({key}), "unknown key");
      (void)value;
    }
    if (doc_.contains("format") && doc_["format"] != kFormatVersion) {
      error("/format", "unsupported format (expected 1)");
    }
    for_each("semirings", [this](const std::string& n, const json& v) { load_semiring(n, v); });
    for_each("semimodules", [this](const std::string& n, const json& v) { load_module(n, v); });
    for_each("morphisms", [this](const std::string& n, const json& v) { load_morphism(n, v); });
    for_each("sequences", [this](const std::string& n, const json& v) { load_sequence(n, v); });
    if (!errors_.empty()) throw ModelError(errors_);
    return std::move(model_);
  }

 private:
  template <class F>
  void for_each(const char* section, F&& load) {
    if (!doc_.contains(section)) return;
    const auto& sec = doc_[section];
    if (!sec.is_object()) {
      error(ptr({section}), "must be an object");
      return;
    }
    for (const auto& [name, value] : sec.items()) {
      if (!value.is_object() && std::string(section) != "sequences") {
        error(ptr({section, name}), "must be an object");
        continue;
      }
      load(name, value);
    }
  }

  void error(const std::string& where, const std::string& what) {
    errors_.push_back((where.empty() ? "/" : where) + ": " + what);
  }

  bool check_keys(const std::string& where, const json& v, const std::set<std::string>& allowed) {
    bool ok = true;
    for (const auto& [key, _] : v.items()) {
      if (!allowed.count(key)) {
        error(where + "/" + escape(key), "unknown key");
        ok = false;
      }
    }
    return ok;
  }

  std::optional<std::vector<std::vector<std::int64_t>>> table(const std::string& where,
                                                                 const json& v) {
    if (!v.is_array()) {
      error(where, "table must be an array of rows");
      return std::nullopt;
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t r = 0; r < v.size(); ++r) {
      const auto& row = v[r];
      if (!row.is_array()) {
        error(where + "/" + std::to_string(r), "row must be an array");
        return std::nullopt;
      }
      std::vector<std::int64_t> out;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (!row[c].is_number_integer()) {
          error(where + "/" + std::to_string(r) + "/" + std::to_string(c), "entry must be an integer");
          return std::nullopt;
        }
        out.push_back(row[c].get<std::int64_t>());
      }
      rows.push_back(std::move(out));
    }
    return rows;
  }

  std::optional<std::int64_t> integer(const std::string& where, const json& v) {
    if (!v.is_number_integer()) {
      error(where, "must be an integer");
      return std::nullopt;
    }
    return v.get<std::int64_t>();
  }

  void report_violations(const std::string& where, const std::vector<Violation>& violations) {
    for (const auto& v : violations) error(where, "axiom violated: " + to_string(v));
  }

  bool check_relabel(const std::string& where, const std::vector<Elem>& relabel) {
    for (Elem i = 0; i < relabel.size(); ++i) {
      if (relabel[i] != i) {
        error(where, "additive identity must be element 0 (found " +
                         std::to_string(std::find(relabel.begin(), relabel.end(), 0) -
                                        relabel.begin()) +
                         ")");
        return false;
      }
    }
    return true;
  }

  void check_size(const std::string& where, const json& v, std::size_t actual) {
    if (!v.contains("size")) return;
    const auto size = integer(where + "/size", v["size"]);
    if (size && *size != static_cast<std::int64_t>(actual)) {
      error(where + "/size", "size " + std::to_string(*size) + " does not match table with " +
                                 std::to_string(actual) + " rows");
    }
  }

  void load_semiring(const std::string& name, const json& v) {
    const auto where = ptr({"semirings", name});
    check_keys(where, v, {"size", "add", "mul", "zero", "one"});
    for (const char* key : {"add", "mul"}) {
      if (!v.contains(key)) error(where, std::string("missing \"") + key + "\"");
    }
    if (!v.contains("add") || !v.contains("mul")) return;
    auto add = table(where + "/add", v["add"]);
    auto mul = table(where + "/mul", v["mul"]);
    const auto zero = v.contains("zero") ? integer(where + "/zero", v["zero"]) : std::optional<std::int64_t>(0);
    const auto one = v.contains("one") ? integer(where + "/one", v["one"]) : std::optional<std::int64_t>(1);
    if (!add || !mul || !zero || !one) return;
    check_size(where, v, add->size());
    try {
      auto r = validate_semiring(RawSemiring{name, std::move(*add), std::move(*mul), *zero, *one});
      report_violations(where, r.violations);
      if (r.ok() && check_relabel(where + "/zero", r.relabel)) {
        model_.semirings[name] = std::make_shared<const FiniteSemiring>(std::move(*r.value));
      }
    } catch (const StructuralError& e) {
      error(where, e.what());
    }
  }

  std::optional<ScalarDomain> scalars(const std::string& where, const json& v) {
    if (!v.is_string()) {
      error(where, "scalars must be \"naturals\" or a semiring name");
      return std::nullopt;
    }
    const auto name = v.get<std::string>();
    if (name == "naturals") return ScalarDomain::naturals();
    if (auto it = model_.semirings.find(name); it != model_.semirings.end()) {
      return ScalarDomain::finite(it->second);
    }
    if (doc_.contains("semirings") && doc_["semirings"].contains(name)) {
      error(where, "semiring '" + name + "' failed to load");
      return std::nullopt;
    }
    try {
      return ScalarDomain::finite(builtin_semiring(name));
    } catch (const StructuralError&) {
      error(where, "unknown semiring '" + name + "'");
      return std::nullopt;
    }
  }

  void load_module(const std::string& name, const json& v) {
    const auto where = ptr({"semimodules", name});
    check_keys(where, v, {"scalars", "size", "add", "action"});
    if (!v.contains("scalars") || !v.contains("add")) {
      error(where, "needs \"scalars\" and \"add\"");
      return;
    }
    auto dom = scalars(where + "/scalars", v["scalars"]);
    auto add = table(where + "/add", v["add"]);
    std::optional<std::vector<std::vector<std::int64_t>>> action;
    if (v.contains("action")) {
      action = table(where + "/action", v["action"]);
      if (!action) return;
    }
    if (!dom || !add) return;
    check_size(where, v, add->size());
    try {
      auto r = validate_semimodule(*dom, RawSemimodule{name, std::move(*add), std::move(action)});
      report_violations(where, r.violations);
      if (r.ok() && check_relabel(where + "/add", r.relabel)) {
        model_.semimodules[name] = std::make_shared<const FiniteSemimodule>(std::move(*r.value));
      }
    } catch (const StructuralError& e) {
      error(where, e.what());
    }
  }

  std::optional<Module> module_ref(const std::string& where, const json& v) {
    if (!v.is_string()) {
      error(where, "must be a semimodule name");
      return std::nullopt;
    }
    const auto name = v.get<std::string>();
    if (doc_.contains("semimodules") && doc_["semimodules"].contains(name) &&
        !model_.semimodules.count(name)) {
      error(where, "semimodule '" + name + "' failed to load");
      return std::nullopt;
    }
    try {
      return model_.module(name);
    } catch (const StructuralError&) {
      error(where, "unknown semimodule '" + name + "'");
      return std::nullopt;
    }
  }

  void load_morphism(const std::string& name, const json& v) {
    const auto where = ptr({"morphisms", name});
    check_keys(where, v, {"dom", "cod", "map"});
    if (!v.contains("dom") || !v.contains("cod") || !v.contains("map")) {
      error(where, "needs \"dom\", \"cod\" and \"map\"");
      return;
    }
    auto dom = module_ref(where + "/dom", v["dom"]);
    auto cod = module_ref(where + "/cod", v["cod"]);
    const auto& arr = v["map"];
    if (!arr.is_array()) {
      error(where + "/map", "must be an array");
      return;
    }
    std::vector<Elem> values;
    bool ok = true;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number_unsigned() || arr[i].get<std::uint64_t>() > 0xffffffffULL) {
        error(where + "/map/" + std::to_string(i), "entry must be an element index");
        ok = false;
        continue;
      }
      values.push_back(arr[i].get<Elem>());
    }
    if (!dom || !cod || !ok) return;
    try {
      auto r = make_linear_map(*dom, *cod, std::move(values));
      report_violations(where + "/map", r.violations);
      if (r.ok()) model_.morphisms[name] = std::move(*r.value);
    } catch (const StructuralError& e) {
      error(where + "/map", std::string("morphism '") + name + "': " + e.what());
    }
  }

  void load_sequence(const std::string& name, const json& v) {
    const auto where = ptr({"sequences", name});
    NamedSequence seq;
    const json* maps = &v;
    if (v.is_object()) {
      check_keys(where, v, {"maps", "zero_left", "zero_right"});
      if (!v.contains("maps")) {
        error(where, "needs \"maps\"");
        return;
      }
      maps = &v["maps"];
      for (const auto& [key, field] : {std::pair<const char*, bool*>{"zero_left", &seq.zero_left},
                                       {"zero_right", &seq.zero_right}}) {
        if (!v.contains(key)) continue;
        if (!v[key].is_boolean()) error(where + "/" + key, "must be a boolean");
        else *field = v[key].get<bool>();
      }
    }
    if (!maps->is_array() || maps->empty()) {
      error(where, "must be a non-empty list of morphism names");
      return;
    }
    bool ok = true;
    for (std::size_t i = 0; i < maps->size(); ++i) {
      const auto& m = (*maps)[i];
      const auto at = where + (v.is_object() ? "/maps/" : "/") + std::to_string(i);
      if (!m.is_string()) {
        error(at, "must be a morphism name");
        ok = false;
      } else if (!model_.morphisms.count(m.get<std::string>())) {
        error(at, "unknown or invalid morphism '" + m.get<std::string>() + "'");
        ok = false;
      } else {
        seq.maps.push_back(m.get<std::string>());
      }
    }
    if (!ok) return;
    model_.sequences[name] = seq;
    try {
      (void)materialize(model_.sequence(name));
    } catch (const StructuralError& e) {
      model_.sequences.erase(name);
      error(where, e.what());
    }
  }

  const json& doc_;
  Model model_;
  std::vector<std::string> errors_;
};

}  // namespace

ModelError::ModelError(std::vector<std::string> errors)
    : StructuralError(join_errors(errors)), errors_(std::move(errors)) {}

Semiring Model::semiring(const std::string& name) const {
  if (auto it = semirings.find(name); it != semirings.end()) return it->second;
  return builtin_semiring(name);
}

Module Model::module(const std::string& name) const {
  if (auto it = semimodules.find(name); it != semimodules.end()) return it->second;
  static std::mutex mutex;
  static std::map<std::string, Module> builtins;
  const std::lock_guard lock(mutex);
  if (auto it = builtins.find(name); it != builtins.end()) return it->second;
  auto m = builtin_module(name);
  builtins.emplace(name, m);
  return m;
}

LinearMap Model::morphism(const std::string& name) const {
  if (auto it = morphisms.find(name); it != morphisms.end()) return it->second;
  throw StructuralError("unknown morphism '" + name + "'");
}

Sequence Model::sequence(const std::string& name) const {
  const auto it = sequences.find(name);
  if (it == sequences.end()) throw StructuralError("unknown sequence '" + name + "'");
  Sequence out;
  out.zero_left = it->second.zero_left;
  out.zero_right = it->second.zero_right;
  for (const auto& m : it->second.maps) out.maps.push_back(morphism(m));
  return out;
}

Model parse_model(const json& doc) { return Loader(doc).run(); }

Model parse_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError({"/: cannot open " + path.string()});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError({"/: " + path.string() + ": " + e.what()});
  }
  return parse_model(doc);
}

std::string canonical_dump(const json& j) { return j.dump(); }

json semiring_json(const FiniteSemiring& s) {
  return {{"size", s.size()}, {"add", s.add.to_rows()}, {"mul", s.mul.to_rows()},
          {"zero", s.zero}, {"one", s.one}};
}

json semimodule_json(const FiniteSemimodule& m) {
  json out{{"scalars", m.scalars.is_naturals() ? "naturals" : m.scalars.ring().name},
           {"size", m.size()},
           {"add", m.add.to_rows()}};
  if (!m.scalars.is_naturals()) out["action"] = m.action.to_rows();
  return out;
}

json serialize_model(const Model& model) {
  json out{{"format", kFormatVersion}};
  if (!model.semirings.empty()) {
    json& s = out["semirings"] = json::object();
    for (const auto& [name, ring] : model.semirings) s[name] = semiring_json(*ring);
  }
  if (!model.semimodules.empty()) {
    json& s = out["semimodules"] = json::object();
    for (const auto& [name, m] : model.semimodules) s[name] = semimodule_json(*m);
  }
  if (!model.morphisms.empty()) {
    json& s = out["morphisms"] = json::object();
    for (const auto& [name, f] : model.morphisms) {
      s[name] = {{"dom", f.dom->name}, {"cod", f.cod->name}, {"map", f.map}};
    }
  }
  if (!model.sequences.empty()) {
    json& s = out["sequences"] = json::object();
    for (const auto& [name, seq] : model.sequences) {
      if (seq.zero_left && seq.zero_right) {
        s[name] = seq.maps;
      } else {
        s[name] = {{"maps", seq.maps}, {"zero_left", seq.zero_left}, {"zero_right", seq.zero_right}};
      }
    }
  }
  return out;
}

}  // namespace semimod
