#include "nhqm/report.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace nhqm {

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(const std::string& name, const std::string& anchor,
                             double value, double tol) {
  checks.push_back({name, anchor, value, tol, value <= tol});
}

void VerificationReport::add_bool(const std::string& name,
                                  const std::string& anchor,
                                  const std::string& value, bool ok) {
  checks.push_back({name, anchor, value, 0.0, ok});
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["scenario"] = scenario;
  if (seed)
    j["seed"] = *seed;
  else
    j["seed"] = nullptr;
  j["params"] = params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["paper_anchor"] = c.paper_anchor;
    if (std::holds_alternative<double>(c.value))
      cj["value"] = std::get<double>(c.value);
    else
      cj["value"] = std::get<std::string>(c.value);
    cj["tol"] = c.tol;
    cj["pass"] = c.pass;
    j["checks"].push_back(cj);
  }
  j["pass"] = pass();
  j["version"] = version;
  return j;
}

void write_json_report(const VerificationReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("unwritable path: " + path);
  out << rep.to_json().dump(2) << "\n";
  if (!out) throw io_error("write failed: " + path);
}

std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_spectra_csv(const std::vector<SpectrumRow>& rows,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("unwritable path: " + path);
  out << "g,index,re_e,im_e\n";
  for (const auto& r : rows)
    out << format_shortest(r.g) << "," << r.index << ","
        << format_shortest(r.e.real()) << "," << format_shortest(r.e.imag())
        << "\n";
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace nhqm
