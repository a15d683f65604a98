#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "extricat/extri/et.hpp"

namespace extricat::workbench {

// A -x-> B -y-> C -z-> A[1]
struct DeclaredTriangle {
  Mor x, y, z;
};

// Shift functor and triangle table of a triangulated input.
struct Triangulated {
  std::vector<Obj> shift;                            // per indecomposable
  std::map<std::tuple<int, int, int>, Vec> basis;    // basis k of Hom(i,j) -> coords in Hom(i[1], j[1])
  std::vector<DeclaredTriangle> triangles;

  Obj on(const Obj& X) const;
  Mor on(const Category& C, const Mor& f) const;
  // X[1] as the sum of the shifted summands of X, in summand order
  Sum shifted(const Category& C, const Obj& X) const;
  // E(C, A) = Hom(C, A[1]), blockwise
  Vec to_ext(const Category& C, const Obj& Cobj, const Obj& A, const Mor& z) const;
  Mor to_mor(const Category& C, const ExtElem& d) const;
};

struct ModelRef {
  std::string kind;  // "nakayama" or "stable-nakayama"
  int n = 0;
};

struct Workspace {
  std::string name;
  std::unique_ptr<ETCat> et;  // always carries the category; E only when has_ext
  bool has_ext = false;
  int table_bound = 0;
  std::optional<ModelRef> model;
  std::optional<Triangulated> tri;
  // triangles beyond the stored table, when the model line names one
  std::function<DeclaredTriangle(const Obj& C, const Obj& A, const Mor& z)> tri_model;
};

Workspace parse_text(const std::string& text);
Workspace parse_file(const std::string& path);  // "-" reads stdin
std::string emit(const Workspace& W);

// semantic checks run at load time; throws DataError
void validate_workspace(const Workspace& W);

// structural equality of the data that emit writes
bool same_workspace(const Workspace& a, const Workspace& b);

// FNV-1a 64, hex
std::string digest(const std::string& bytes);

}  // namespace extricat::workbench
