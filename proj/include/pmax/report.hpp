#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pmax {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Structured result shared by every analysis and verification step.
/// Serializes to JSON with fields in insertion order, so equal runs give
/// byte-identical output.
class Report {
 public:
  explicit Report(std::string kind = {}) : kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

  template <typename T>
  void set(const std::string& key, T&& value) {
    fields_[key] = std::forward<T>(value);
  }
  const nlohmann::ordered_json& fields() const { return fields_; }

  /// Records a check and returns its outcome.
  bool check(std::string name, bool passed, std::string detail = {});
  /// Appends the checks of `other`, prefixing their names.
  void absorb(const Report& other, const std::string& prefix);

  bool passed() const;
  const std::vector<Check>& checks() const { return checks_; }
  /// Name and detail of the first failed check, or empty.
  std::string first_failure() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const { return to_json().dump(2) + "\n"; }

 private:
  std::string kind_;
  nlohmann::ordered_json fields_ = nlohmann::ordered_json::object();
  std::vector<Check> checks_;
};

}  // namespace pmax
