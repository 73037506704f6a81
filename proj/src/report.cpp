#include "pmax/report.hpp"

namespace pmax {

bool Report::check(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
  return passed;
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return c.detail.empty() ? c.name : c.name + ": " + c.detail;
  return {};
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["report"] = kind_;
  for (const auto& [k, v] : fields_.items()) out[k] = v;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  out["checks"] = checks;
  out["passed"] = passed();
  return out;
}

}  // namespace pmax
