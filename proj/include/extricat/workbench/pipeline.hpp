#pragma once

#include <optional>
#include <string>

#include "extricat/workbench/generators.hpp"
#include "extricat/workbench/report.hpp"

namespace extricat::workbench {

// A parsed input; triangulated files without [ext] are read through their shifted triple.
struct Loaded {
  std::string bytes;
  Workspace ws;
  std::optional<ShiftedTriple> shifted;
  const ETCat& et() const { return shifted ? *shifted->et : *ws.et; }
};
Loaded load_input(const std::string& path);
Loaded load_text(std::string text);

struct Triple {
  Subcat S, Z, V;
  std::string spec;
};
// "S,Z,V"; each part is ALL, NONE, a declared subcategory, or indecomposables joined by '+'
Triple parse_triple(const ETCat& et, const std::string& spec);

struct RunOptions {
  std::uint32_t seed = 0;
  int reseed = 0;  // extra runs under seeds seed+1 .. seed+reseed, compared to the first
  bool timing = false;
};

VerificationReport run_validate(const Loaded& in, const RunOptions& opt);
VerificationReport run_mutation_check(const Loaded& in, const Triple& t, const RunOptions& opt);
VerificationReport run_induce(const Loaded& in, const Triple& t, const RunOptions& opt);
VerificationReport run_axioms(const Loaded& in, const Triple& t, const RunOptions& opt);

}  // namespace extricat::workbench
