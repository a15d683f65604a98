#pragma once

#include <string>
#include <vector>

#include "extricat/extri/et.hpp"

namespace extricat {

// E_D (killed by precomposition with D-maps), E^D (killed by postcomposition), or both.
// Stored as per-indecomposable-pair constraint matrices; membership is blockwise.
class RelExt {
 public:
  enum Kind { Full, Sub, Sup, Both };
  RelExt(const ETCat& et, Kind kind, Subcat D);
  static RelExt full(const ETCat& et) { return RelExt(et, Full, Subcat(et.n())); }

  const ETCat& et() const { return *et_; }
  Kind kind() const { return kind_; }
  const Subcat& D() const { return D_; }
  std::string name() const;

  bool contains(const ExtElem& d) const;
  // basis of the subspace of E(C, A)
  std::vector<Vec> basis(const Obj& C, const Obj& A) const;
  int dim(const Obj& C, const Obj& A) const { return static_cast<int>(basis(C, A).size()); }
  bool is_zero(const Obj& C, const Obj& A) const { return dim(C, A) == 0; }
  void for_each(const Obj& C, const Obj& A, const std::function<bool(const ExtElem&)>& f) const;
  // constraint rows on E(c, a) for indecomposables
  const Mat& constraints(int c, int a) const { return K_[c * et_->n() + a]; }

 private:
  const ETCat* et_;
  Kind kind_;
  Subcat D_;
  std::vector<Mat> K_;
};

// E^D ∩ E_D as its own structure
inline RelExt both(const ETCat& et, const Subcat& D) { return RelExt(et, RelExt::Both, D); }

}  // namespace extricat
