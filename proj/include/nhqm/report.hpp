#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nhqm/core.hpp"

namespace nhqm {

inline constexpr const char* kVersion = "1.0.0";

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  std::string paper_anchor;
  std::variant<double, std::string> value;
  double tol = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  std::string version = kVersion;

  bool pass() const;
  nlohmann::json to_json() const;

  // value <= tol passes
  void add(const std::string& name, const std::string& anchor, double value,
           double tol);
  // free-form check with an explicit verdict
  void add_bool(const std::string& name, const std::string& anchor,
                const std::string& value, bool ok);
};

void write_json_report(const VerificationReport& rep, const std::string& path);

struct SpectrumRow {
  double g;
  int index;
  cd e;
};

// Header exactly: g,index,re_e,im_e. Numbers in shortest round-trip form.
void write_spectra_csv(const std::vector<SpectrumRow>& rows,
                       const std::string& path);

std::string format_shortest(double v);

}  // namespace nhqm
