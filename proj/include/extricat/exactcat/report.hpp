#pragma once

#include <string>
#include <vector>

#include "extricat/exactcat/category.hpp"
#include "json.hpp"

namespace extricat {

using json = nlohmann::ordered_json;

// Outcome of one check. A failure keeps the first counterexample in `witness`.
struct Report {
  std::string check;
  bool pass = true;
  bool ran = true;
  std::string detail;
  json witness = json::object();
  long cases = 0;

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}
  void fail(const std::string& why, json w = json::object()) {
    if (!pass) return;
    pass = false;
    detail = why;
    witness = std::move(w);
  }
  void skip(const std::string& why) {
    ran = false;
    pass = false;
    detail = why;
  }
  // fold a sub-report in; the first failure wins
  void absorb(const Report& r);
  json to_json() const;
};

json mor_json(const Category& C, const Mor& f);
json obj_json(const Category& C, const Obj& X);

}  // namespace extricat
