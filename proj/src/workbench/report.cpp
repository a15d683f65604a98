#include "extricat/workbench/report.hpp"

#include <sstream>

namespace extricat::workbench {

bool VerificationReport::pass() const {
  for (auto& [s, r] : verdicts)
    if (!r.pass) return false;
  return true;
}

json VerificationReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = std::string("extricat ") + kToolVersion;
  j["command"] = command;
  j["input"] = {{"name", input_name}, {"digest", input_digest}};
  j["seed"] = seed;
  j["pass"] = pass();
  json v = json::array();
  for (auto& [stage, r] : verdicts) {
    json e = r.to_json();
    e["stage"] = stage;
    v.push_back(e);
  }
  j["verdicts"] = v;
  if (!extra.empty()) j["data"] = extra;
  if (!timing.empty()) j["timing"] = timing;
  return j;
}

namespace {

std::string cell(std::string s) {
  for (char& c : s)
    if (c == '|' || c == '\n') c = ' ';
  return s;
}

}  // namespace

std::string render_markdown(const json& j) {
  std::ostringstream o;
  o << "# extricat report\n\n";
  o << "- command: `" << j.value("command", "") << "`\n";
  if (j.contains("input"))
    o << "- input: " << j["input"].value("name", "") << " (digest " << j["input"].value("digest", "") << ")\n";
  o << "- seed: " << j.value("seed", 0) << "\n";
  o << "- overall: **" << (j.value("pass", false) ? "pass" : "FAIL") << "**\n\n";
  o << "| stage | check | verdict | cases | detail |\n|---|---|---|---|---|\n";
  for (auto& v : j.value("verdicts", json::array()))
    o << "| " << cell(v.value("stage", "")) << " | " << cell(v.value("check", "")) << " | "
      << v.value("verdict", "") << " | " << v.value("cases", 0) << " | " << cell(v.value("detail", "")) << " |\n";
  bool any = false;
  for (auto& v : j.value("verdicts", json::array()))
    if (v.contains("witness") && !v["witness"].empty()) {
      if (!any) o << "\n## witnesses\n";
      any = true;
      o << "\n### " << v.value("check", "") << "\n\n```json\n" << v["witness"].dump(2) << "\n```\n";
    }
  if (j.contains("timing")) {
    o << "\n## timing\n\n";
    for (auto& [k, t] : j["timing"].items()) o << "- " << k << ": " << t.dump() << " s\n";
  }
  return o.str();
}

}  // namespace extricat::workbench
