#pragma once

#include <string>
#include <vector>

#include "extricat/exactcat/report.hpp"

namespace extricat::workbench {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kReportSchema = "extricat-report/1";

// Verdicts grouped under stage names, in run order.
struct VerificationReport {
  std::string command;
  std::string input_name, input_digest;
  std::uint32_t seed = 0;
  std::vector<std::pair<std::string, Report>> verdicts;
  json extra = json::object();   // command-specific payload (tables, triples)
  json timing = json::object();  // only emitted when non-empty

  void add(const std::string& stage, const Report& r) { verdicts.emplace_back(stage, r); }
  bool pass() const;
  json to_json() const;
};

std::string render_markdown(const json& report);

}  // namespace extricat::workbench
