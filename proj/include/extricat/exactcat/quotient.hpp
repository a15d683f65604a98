#pragma once

#include <optional>
#include <vector>

#include "extricat/exactcat/category.hpp"

namespace extricat {

// C/[I]. The quotient basis of Hom(i,j) is the set of coordinates that are not
// pivots of the ideal's rref, so sections are coordinate inclusions.
class Quotient {
 public:
  Quotient(const Category& C, Subcat I);

  const Category& base() const { return *C_; }
  const Subcat& ideal() const { return I_; }
  Elem p() const { return C_->p; }

  int qdim(int i, int j) const { return static_cast<int>(free_[key(i, j)].size()); }
  int qdim(const Obj& X, const Obj& Y) const;
  // basis of [I](i,j) as coordinate vectors
  std::vector<Vec> ideal_basis(int i, int j) const;
  int ideal_dim(int i, int j) const { return span_[key(i, j)].rank(); }

  Vec reduce(const Mor& f) const;  // quotient coordinates
  Mat proj(const Obj& X, const Obj& Y) const;
  Mor lift(const Obj& X, const Obj& Y, const Vec& q) const;
  bool is_zero(const Mor& f) const;
  bool eq(const Mor& f, const Mor& g) const;
  bool is_zero_object(const Obj& X) const;
  // drop summands in I
  Obj strip(const Obj& X) const;

 private:
  int key(int i, int j) const { return i * C_->n() + j; }
  const Category* C_;
  Subcat I_;
  std::vector<Span> span_;
  std::vector<std::vector<int>> free_;
};

// [I](i,j) via factorizations through arbitrary I-objects up to the given multiplicity.
std::vector<Vec> ideal_via_objects(const Category& C, const Subcat& I, int i, int j, int mult);

struct IsoWitness {
  bool iso = false;
  std::optional<Mor> inverse;
};
IsoWitness is_iso_mod_ideal(const Mor& f, const Quotient& Q);

}  // namespace extricat
