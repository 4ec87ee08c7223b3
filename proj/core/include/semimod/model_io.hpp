#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semimod/exactness.hpp"

namespace semimod {

inline constexpr int kFormatVersion = 1;

/// Load failures, one message per problem, each prefixed with the JSON
/// pointer of the offending value.
class ModelError : public StructuralError {
 public:
  explicit ModelError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct NamedSequence {
  std::vector<std::string> maps;
  bool zero_left = true;
  bool zero_right = true;
};

/// A resolved model file. Lookups fall back to the builtin catalog for
/// semiring and semimodule names the file does not define.
struct Model {
  std::map<std::string, Semiring> semirings;
  std::map<std::string, Module> semimodules;
  std::map<std::string, LinearMap> morphisms;
  std::map<std::string, NamedSequence> sequences;

  Semiring semiring(const std::string& name) const;
  Module module(const std::string& name) const;
  LinearMap morphism(const std::string& name) const;
  Sequence sequence(const std::string& name) const;
};

Model parse_model(const nlohmann::json& doc);
Model parse_model_file(const std::filesystem::path& path);

/// Canonical form: sorted keys, compact, "format": 1. Semimodules over a
/// semiring the file does not define refer to it by name.
nlohmann::json serialize_model(const Model& model);

/// Compact dump with sorted keys (the canonical byte form of every report).
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json semiring_json(const FiniteSemiring& s);
nlohmann::json semimodule_json(const FiniteSemimodule& m);

}  // namespace semimod
