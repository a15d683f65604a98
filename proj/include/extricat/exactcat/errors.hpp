#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extricat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shape mismatches, misuse of an operation
struct DomainError : Error {
  using Error::Error;
};

// the input data is inconsistent (bad ET structure, failed load validation)
struct DataError : Error {
  using Error::Error;
};

// an enumeration would exceed the configured cardinality cap
struct CapExceeded : Error {
  using Error::Error;
};

// a class has no stored realization and no model to compute one
struct TableIncomplete : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line, col;
  ParseError(int l, int c, const std::string& msg)
      : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

// Enumeration cap, default 2^16 elements; EXTRICAT_CAP overrides.
std::uint64_t enum_cap();
void set_enum_cap(std::uint64_t cap);

// p^dim, saturating. Throws CapExceeded when it passes the cap.
std::uint64_t guarded_count(std::uint32_t p, int dim, const std::string& what);

}  // namespace extricat
