// Machine-readable pass/fail verdicts plus the computed invariants for each
// pipeline. Reports are deterministic: identical inputs give byte-identical
// text and JSON documents.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace grcalc {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string kind;                 // "flag", "toric", "verify"
  nlohmann::ordered_json sections;  // computed data, insertion-ordered
  std::vector<Check> checks;

  bool overall() const;
  void add_check(const std::string& name, bool pass, const std::string& detail);
  void absorb(const Report& other, const std::string& prefix);  // prefix other's checks

  nlohmann::ordered_json to_json() const;
  std::string to_json_string() const;  // indented, trailing newline
  std::string to_text() const;         // one [PASS]/[FAIL] line per check
};

}  // namespace grcalc
