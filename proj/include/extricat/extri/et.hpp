#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "extricat/exactcat/category.hpp"
#include "extricat/exactcat/quotient.hpp"
#include "extricat/exactcat/report.hpp"

namespace extricat {

// Element of E(C, A). Blocks (t, s) live in E(C_s, A_t), t-major like Mor.
struct ExtElem {
  Obj C, A;
  Vec c;
  bool operator==(const ExtElem&) const = default;
};

// E on indecomposables with its two actions; extended blockwise to sums.
class ExtStructure {
 public:
  ExtStructure() = default;
  explicit ExtStructure(const Category* C);

  int dim(int c, int a) const { return dim_[c * n_ + a]; }
  void set_dim(int c, int a, int d) { dim_[c * n_ + a] = d; }
  // zero action matrices once dims are set
  void alloc();

  // basis k of Hom(j,i) acting E(i,A) -> E(j,A), delta -> delta b
  Mat& ract(int j, int i, int k, int A) { return ract_[ridx(j, i, k, A)]; }
  const Mat& ract(int j, int i, int k, int A) const { return ract_[ridx(j, i, k, A)]; }
  // basis k of Hom(a,b) acting E(C,a) -> E(C,b), delta -> a delta
  Mat& lact(int a, int b, int k, int C) { return lact_[ridx(a, b, k, C)]; }
  const Mat& lact(int a, int b, int k, int C) const { return lact_[ridx(a, b, k, C)]; }

  int dim(const Obj& C, const Obj& A) const;
  std::vector<int> offsets(const Obj& C, const Obj& A) const;
  Vec block(const ExtElem& d, int t, int s) const;
  ExtElem zero(const Obj& C, const Obj& A) const { return ExtElem{C, A, Vec(dim(C, A), 0)}; }
  ExtElem make(const Obj& C, const Obj& A, Vec c) const;

  ExtElem right(const ExtElem& d, const Mor& b) const;  // delta b
  ExtElem left(const Mor& a, const ExtElem& d) const;   // a delta
  ExtElem add(const ExtElem& x, const ExtElem& y) const;
  ExtElem sub(const ExtElem& x, const ExtElem& y) const;
  ExtElem neg(const ExtElem& x) const;

  // linear maps used in fill-in systems
  Mat pre(const Mor& b, const Obj& A) const;           // E(cod b, A) -> E(dom b, A)
  Mat post(const Mor& a, const Obj& C) const;          // E(C, dom a) -> E(C, cod a)
  Mat on_pre(const ExtElem& d, const Obj& Y) const;    // Hom(Y, d.C) -> E(Y, d.A), b -> d b
  Mat on_post(const ExtElem& d, const Obj& A2) const;  // Hom(d.A, A2) -> E(d.C, A2), a -> a d

  // identities act trivially; actions compose; the two actions commute
  Report validate_bifunctor() const;
  const Category& cat() const { return *C_; }

 private:
  int ridx(int j, int i, int k, int A) const { return (base_[j * n_ + i] + k) * n_ + A; }
  const Category* C_ = nullptr;
  int n_ = 0;
  std::vector<int> dim_, base_;
  std::vector<Mat> ract_, lact_;
};

// An s-triangle A -x-> B -y-> C with class delta in E(C, A).
struct Conflation {
  Mor x, y;
  ExtElem delta;
  const Obj& A() const { return x.dom; }
  const Obj& B() const { return x.cod; }
  const Obj& C() const { return y.cod; }
};

class ETCat;

// s as a table of per-element realizations, optionally backed by a model consulted on misses.
class Realizer {
 public:
  using Model = std::function<Conflation(const ExtElem&)>;
  using Key = std::tuple<std::vector<int>, std::vector<int>, Vec>;

  // On a duplicate key the lexicographically smaller representative is kept.
  void insert(const Category& C, Conflation c);
  void set_model(Model m, std::string name);
  bool has_model() const { return static_cast<bool>(model_); }
  const std::string& model_name() const { return model_name_; }
  bool stored(const ExtElem& d) const;
  // table, then model cache, then model; zero classes fall back to the split conflation
  Conflation get(const Category& C, const ExtElem& d) const;
  std::vector<Conflation> records() const;
  std::size_t size() const { return table_.size(); }
  void replace(const Conflation& c);  // overwrite an entry (used to build negative tests)

 private:
  std::map<Key, Conflation> table_;
  mutable std::map<Key, Conflation> cache_;
  mutable std::mutex mu_;
  Model model_;
  std::string model_name_;
};

// the split conflation A -> A+C -> C carrying the (zero) class d
Conflation split_conflation(const Category& C, const ExtElem& d);
// lexicographic order on (middle object, x, y)
bool conflation_before(const Conflation& a, const Conflation& b);
// is there e: B -> B' with e x = x', y' e = y (such an e is automatically invertible)
bool equivalent(const Category& C, const Conflation& a, const Conflation& b);

// The triple (C, E, s). Not movable: E points at C.
class ETCat {
 public:
  Category C;
  ExtStructure E;
  Realizer s;
  std::map<std::string, Subcat> subcats;
  std::string name;
  int table_bound = 0;

  explicit ETCat(Category c);
  ETCat(const ETCat&) = delete;
  ETCat& operator=(const ETCat&) = delete;

  Elem p() const { return C.p; }
  int n() const { return C.n(); }
  Conflation realize(const ExtElem& d) const { return s.get(C, d); }
  // all objects with at most `bound` summands, in canonical search order (zero first)
  std::vector<Obj> objects(int bound, const Subcat* within = nullptr) const;
  // all elements of E(C, A), lexicographic
  void for_each_ext(const Obj& Cobj, const Obj& A, const std::function<bool(const ExtElem&)>& f) const;
  json ext_json(const ExtElem& d) const;
  json conf_json(const Conflation& c) const;
};

}  // namespace extricat
