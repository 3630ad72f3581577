#pragma once

// Scenario reports: named values with a provenance tag (the oracle or
// reference each claim comes from), witnesses, and a verdict. Rendered as
// aligned text or as one JSON document.

#include <string>
#include <vector>

#include "json.hpp"

namespace amg {

struct Report {
  struct Value {
    std::string name;
    nlohmann::ordered_json value;
    std::string source;
  };

  std::string scenario;
  bool pass = true;
  std::vector<Value> values;
  std::vector<nlohmann::ordered_json> witnesses;
  std::vector<std::string> notes;
  std::vector<Report> children;  // sub-scenarios of an aggregate run

  void add(std::string name, nlohmann::ordered_json value, std::string source);
  /// Records a boolean property; a false value fails the report.
  void check(std::string name, bool ok, std::string source);
  void witness(nlohmann::ordered_json w) { witnesses.push_back(std::move(w)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void child(Report r);

  std::string text() const;
  nlohmann::ordered_json json() const;
};

}  // namespace amg
