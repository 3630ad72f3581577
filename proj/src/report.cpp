#include "amalgam/report.hpp"

#include <algorithm>
#include <sstream>

namespace amg {

void Report::add(std::string name, nlohmann::ordered_json value, std::string source) {
  values.push_back({std::move(name), std::move(value), std::move(source)});
}

void Report::check(std::string name, bool ok, std::string source) {
  if (!ok) pass = false;
  add(std::move(name), ok, std::move(source));
}

void Report::child(Report r) {
  if (!r.pass) pass = false;
  children.push_back(std::move(r));
}

namespace {

std::string render(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

void render_into(const Report& r, std::ostringstream& out, const std::string& indent) {
  out << indent << "scenario: " << r.scenario << "\n";
  std::size_t width = 0;
  for (const auto& v : r.values) width = std::max(width, v.name.size());
  for (const auto& v : r.values) {
    out << indent << "  " << v.name << ":" << std::string(width - v.name.size() + 1, ' ') << render(v.value);
    if (!v.source.empty()) out << "  [" << v.source << "]";
    out << "\n";
  }
  for (const auto& w : r.witnesses) out << indent << "  witness: " << w.dump() << "\n";
  for (const auto& n : r.notes) out << indent << "  note: " << n << "\n";
  for (const auto& c : r.children) render_into(c, out, indent + "  ");
  out << indent << "verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  render_into(*this, out, "");
  return out.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["verdict"] = pass ? "pass" : "fail";
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& v : values) vals.push_back({{"name", v.name}, {"value", v.value}, {"source", v.source}});
  j["values"] = std::move(vals);
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  if (!children.empty()) {
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : children) cs.push_back(c.json());
    j["scenarios"] = std::move(cs);
  }
  return j;
}

}  // namespace amg
