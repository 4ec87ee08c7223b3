#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "semimod/projectivity.hpp"
#include "semimod/rational.hpp"

namespace semimod {

/// Tool version baked in at build time.
std::string tool_version();

/// {"tool", "version", "format", "command", "seed", "budget", "result"}.
nlohmann::json report_envelope(const std::string& command, nlohmann::json result,
                               std::uint64_t seed, std::uint64_t budget);

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const LinearMap& f);
nlohmann::json to_json(const FiniteSemimodule& m);  // name, size and tables
nlohmann::json to_json(const Congruence& c);
nlohmann::json to_json(const NormalityReport& r);
nlohmann::json to_json(const PositionReport& r);
nlohmann::json to_json(const ExactnessReport& r);
nlohmann::json to_json(const ShortExactReport& r);
nlohmann::json to_json(const Splittings& s);
nlohmann::json to_json(const PullbackResult& r);
nlohmann::json to_json(const PushoutResult& r);
nlohmann::json to_json(const UniversalCheck& r);
nlohmann::json to_json(const ProjectivityWitness& w);
nlohmann::json to_json(const ProjectivityReport& r);
nlohmann::json to_json(const GlobalReport& r);
nlohmann::json to_json(const WitnessCheck& r);
nlohmann::json to_json(const RationalMatrix2& m);

}  // namespace semimod
