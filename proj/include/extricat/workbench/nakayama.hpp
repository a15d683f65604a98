#pragma once

#include <memory>
#include <vector>

#include "extricat/extri/et.hpp"

namespace extricat::nakayama {

// Modules over F_p[x]/(x^n). Indecomposable index i is the Jordan module M_{i+1}
// with basis e_0 (generator) .. e_i (socle) and x e_j = e_{j+1}.
// Basis k of Hom(M_a, M_b) is phi_t: e_0 -> e_t with t = max(0, b-a) + k.
class Model {
 public:
  Model(int n, Elem p);
  int n() const { return n_; }
  Elem p() const { return p_; }

  Category category() const;
  // Ext^1 on indecomposables by cocycles, with both actions
  void fill_ext(ExtStructure& E) const;

  int len(int i) const { return i + 1; }
  int dim(const Obj& X) const;
  Mat nilpotent(const Obj& X) const;     // x acting on the underlying space
  Mat matrix(const Mor& f) const;        // underlying linear map
  Mor from_matrix(const Obj& X, const Obj& Y, const Mat& F) const;

  // Jordan decomposition: columns of P are a basis in which N is block Jordan, blocks in obj order
  struct Decomp {
    Obj obj;
    Mat P;
  };
  Decomp decompose(const Mat& N) const;

  // cocycle theta: k^dim C -> k^dim A of an extension class, and back
  Mat cocycle(const ExtElem& d) const;
  Vec class_coords(const Obj& C, const Obj& A, const Mat& theta) const;
  Conflation realize(const ExtElem& d) const;
  // class of an exact sequence given by module maps, read off through a linear section of y
  Vec class_of(const Conflation& c) const;

 private:
  int n_;
  Elem p_;
  // per (c, a): basis cocycles (a x c), and the matrix [basis | coboundaries] used to read coordinates
  std::vector<std::vector<Mat>> ebasis_;
  std::vector<Mat> reader_;
  Mat jordan(int len) const;
  Mat phi(int a, int b, int k) const;
};

// Attach the model as a lazy realizer.
void attach(ETCat& et, std::shared_ptr<const Model> m);

}  // namespace extricat::nakayama
