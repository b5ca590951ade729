#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "nhqm/report.hpp"
#include "nhqm/scenarios.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"verification suite runner"};
  app.require_subcommand(0, 1);

  bool list = false;
  app.add_flag("--list-scenarios", list, "print scenario names and exit");

  std::string config_path, out_dir = ".";
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("config", config_path, "JSON config path")->required();
  run->add_option("--out", out_dir, "output directory");
  std::uint64_t seed_value = 0;
  auto* seed_opt =
      run->add_option("--seed", seed_value, "seed override (u64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& name : nhqm::scenario_names()) std::cout << name << "\n";
    return 0;
  }
  if (!run->parsed()) {
    std::cerr << app.help();
    return 2;
  }
  if (seed_opt->count() > 0) seed = seed_value;

  nlohmann::json config;
  {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot open config: " << config_path << "\n";
      return 2;
    }
    try {
      in >> config;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "config parse error: " << e.what() << "\n";
      return 2;
    }
  }

  nhqm::VerificationReport report;
  try {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    report = nhqm::run_scenario(config, out_dir, seed);
  } catch (const nhqm::io_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "scenario failed: " << e.what() << "\n";
    return 2;
  }

  const fs::path report_path =
      fs::path(out_dir) / (report.scenario + "_report.json");
  try {
    nhqm::write_json_report(report, report_path.string());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  for (const auto& c : report.checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
  std::cout << (report.pass() ? "overall: pass" : "overall: fail") << "\n";
  return report.pass() ? 0 : 1;
}
