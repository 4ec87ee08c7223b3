#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace semimod {

struct CorpusItemResult {
  std::string name;
  bool passed = false;
  /// Failed expectations, in check order.
  std::vector<std::string> failures;
  /// "match", "drift", "missing" or "written".
  std::string golden;
  nlohmann::json report;
};

struct CorpusResult {
  bool passed = true;
  std::vector<CorpusItemResult> items;
};

/// Directory holding the bundled fixtures and corpus/golden/.
std::filesystem::path default_corpus_dir();

const std::vector<std::string>& corpus_item_names();

/// Runs every corpus item and compares each report with its golden file.
/// With `write_goldens` the goldens are rewritten instead of compared.
CorpusResult corpus_verify(const std::filesystem::path& dir, bool write_goldens = false);

nlohmann::json to_json(const CorpusItemResult& r);
nlohmann::json to_json(const CorpusResult& r);

}  // namespace semimod
