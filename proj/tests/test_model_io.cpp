#include <doctest.h>

#include <fstream>
#include <sstream>

#include "semimod/catalog.hpp"
#include "semimod/model_io.hpp"

using namespace semimod;
using nlohmann::json;

namespace {

const std::string kCorpus = SEMIMOD_TEST_CORPUS_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> errors_of(const json& doc) {
  try {
    parse_model(doc);
  } catch (const ModelError& e) {
    return e.errors();
  }
  return {};
}

bool any_contains(const std::vector<std::string>& errors, const std::string& needle) {
  for (const auto& e : errors)
    if (e.find(needle) != std::string::npos) return true;
  return false;
}

json z2_doc() {
  return json::parse(R"({"format":1,"semimodules":{"Z2":{"add":[[0,1],[1,0]],"scalars":"naturals","size":2}}})");
}

}  // namespace

TEST_SUITE("model_io") {
  TEST_CASE("fixtures round-trip byte for byte") {
    for (const auto* name : {"b31.json", "bb.json"}) {
      INFO(name);
      const auto path = kCorpus + "/" + name;
      const auto text = read_file(path);
      const auto model = parse_model_file(path);
      CHECK(canonical_dump(serialize_model(model)) + "\n" == text);
    }
  }

  TEST_CASE("fixture contents") {
    const auto model = parse_model_file(kCorpus + "/b31.json");
    CHECK(model.semiring("B31")->size() == 3);
    CHECK(model.module("B31")->size() == 3);
    CHECK(model.morphism("f").map == std::vector<Elem>{0, 1, 1});
    const auto seq = model.sequence("ses");
    CHECK(seq.maps.size() == 2);
    CHECK(seq.zero_left);
    CHECK(seq.zero_right);
    // Builtin fallback.
    CHECK(model.module("reg(B)")->size() == 2);
    CHECK_THROWS_AS(model.morphism("nope"), StructuralError);

    const auto bb = parse_model_file(kCorpus + "/bb.json");
    const auto rho = bb.sequence("rho");
    CHECK(rho.zero_left);
    CHECK_FALSE(rho.zero_right);
  }

  TEST_CASE("canonical dump") {
    CHECK(canonical_dump(json::parse(R"({"b":1,"a":[1,2]})")) == "{\"a\":[1,2],\"b\":1}");
  }

  TEST_CASE("morphism errors name the morphism and the index") {
    auto doc = z2_doc();
    doc["morphisms"]["bad"] = {{"dom", "Z2"}, {"cod", "Z2"}, {"map", {0, 5}}};
    const auto errors = errors_of(doc);
    REQUIRE_FALSE(errors.empty());
    CHECK(any_contains(errors, "/morphisms/bad/map/1"));

    auto nonlinear = z2_doc();
    nonlinear["semimodules"]["L"] = {{"add", {{0, 1}, {1, 1}}}, {"scalars", "naturals"}};
    nonlinear["morphisms"]["g"] = {{"dom", "Z2"}, {"cod", "L"}, {"map", {0, 1}}};
    const auto e2 = errors_of(nonlinear);
    REQUIRE_FALSE(e2.empty());
    CHECK(any_contains(e2, "/morphisms/g/map"));
  }

  TEST_CASE("scalar mismatch and unknown references") {
    auto doc = z2_doc();
    doc["morphisms"]["m"] = {{"dom", "Z2"}, {"cod", "reg(B)"}, {"map", {0, 0}}};
    CHECK_FALSE(errors_of(doc).empty());

    auto unknown = z2_doc();
    unknown["morphisms"]["m"] = {{"dom", "Z2"}, {"cod", "Nowhere"}, {"map", {0, 0}}};
    CHECK(any_contains(errors_of(unknown), "unknown semimodule 'Nowhere'"));

    auto scal = z2_doc();
    scal["semimodules"]["X"] = {{"add", {{0}}}, {"scalars", "Q"}};
    CHECK(any_contains(errors_of(scal), "/semimodules/X/scalars"));
  }

  TEST_CASE("structural errors") {
    auto doc = z2_doc();
    doc["extra"] = 1;
    CHECK(any_contains(errors_of(doc), "/extra: unknown key"));

    auto fmt = z2_doc();
    fmt["format"] = 2;
    CHECK(any_contains(errors_of(fmt), "/format"));

    auto size = z2_doc();
    size["semimodules"]["Z2"]["size"] = 3;
    CHECK(any_contains(errors_of(size), "/semimodules/Z2/size"));

    auto assoc = z2_doc();
    assoc["semimodules"]["Bad"] = {{"add", {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}}, {"scalars", "naturals"}};
    CHECK(any_contains(errors_of(assoc), "/semimodules/Bad"));

    auto seq = z2_doc();
    seq["sequences"]["s"] = json::array({"missing"});
    CHECK(any_contains(errors_of(seq), "/sequences/s/0"));

    CHECK_FALSE(errors_of(json::array()).empty());
    CHECK_THROWS_AS(parse_model_file(kCorpus + "/does-not-exist.json"), ModelError);
  }

  TEST_CASE("several problems are reported together") {
    auto doc = z2_doc();
    doc["extra"] = 1;
    doc["morphisms"]["bad"] = {{"dom", "Z2"}, {"cod", "Z2"}, {"map", {0, 5}}};
    CHECK(errors_of(doc).size() >= 2);
  }

  TEST_CASE("serialized models reload to equal tables") {
    Model m;
    m.semimodules["BB"] = builtin_module("reg(B)+reg(B)");
    m.semimodules["Z2"] = builtin_module("Z2");
    const auto doc = serialize_model(m);
    const auto back = parse_model(doc);
    CHECK(back.module("BB")->add == m.semimodules["BB"]->add);
    CHECK(back.module("BB")->action == m.semimodules["BB"]->action);
    CHECK(canonical_dump(serialize_model(back)) == canonical_dump(doc));
  }
}
