#pragma once

#include <filesystem>

#include "nhqm/report.hpp"

namespace nhqm {

// Named verification suites. Each consumes its parameters from the config
// object (defaults filled in), runs the checks, and returns the report;
// side files (spectra CSV) are written into out_dir.
VerificationReport run_scenario(const nlohmann::json& config,
                                const std::filesystem::path& out_dir,
                                std::optional<std::uint64_t> seed_override);

std::vector<std::string> scenario_names();

}  // namespace nhqm
