#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semimod/types.hpp"

namespace semimod {

struct LawOptions {
  /// Sampled suites: number of random cases (0 = suite default).
  /// Exhaustive suites: 0 runs every case, otherwise a seeded subset.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct LawResult {
  std::string suite;
  bool passed = true;
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// Hypothesis-hit counts and similar per-suite figures.
  nlohmann::json stats = nlohmann::json::object();
  /// null on pass; otherwise {"case", "statement", "details", "model"} where
  /// "model" is a loadable model file reproducing the instance.
  nlohmann::json counterexample = nullptr;
};

const std::vector<std::string>& law_suite_names();

/// Throws StructuralError for an unknown suite name.
LawResult run_law_suite(const std::string& name, const LawOptions& options = {});

nlohmann::json to_json(const LawResult& r);

}  // namespace semimod
