#include "grcalc/report.hpp"

#include <sstream>

namespace grcalc {

bool Report::overall() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add_check(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  if (!other.sections.is_null()) sections[prefix] = other.sections;
  for (const auto& c : other.checks) checks.push_back({prefix + "." + c.name, c.pass, c.detail});
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["sections"] = sections.is_null() ? nlohmann::ordered_json::object() : sections;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  j["overall"] = overall();
  return j;
}

std::string Report::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string Report::to_text() const {
  std::ostringstream out;
  out << "report: " << kind << "\n";
  if (!sections.is_null())
    for (const auto& [key, value] : sections.items())
      out << "  " << key << ": " << value.dump() << "\n";
  for (const auto& c : checks)
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  out << "overall: " << (overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace grcalc
