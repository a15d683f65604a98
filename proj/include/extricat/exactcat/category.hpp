#pragma once

#include <string>
#include <vector>

#include "extricat/exactcat/mat.hpp"

namespace extricat {

// Formal direct sum: sorted multiset of indecomposable indices. Empty = zero object.
struct Obj {
  std::vector<int> s;
  Obj() = default;
  explicit Obj(std::vector<int> v);
  static Obj of(int i) { return Obj(std::vector<int>{i}); }
  int size() const { return static_cast<int>(s.size()); }
  bool empty() const { return s.empty(); }
  int operator[](int k) const { return s[k]; }
  bool operator==(const Obj&) const = default;
  bool operator<(const Obj& o) const { return s < o.s; }
};

Obj operator+(const Obj& a, const Obj& b);
// canonical search order: fewer summands first, then lexicographic
bool obj_before(const Obj& a, const Obj& b);

// Morphism dom -> cod. Coordinates block (t, s) in Hom(dom_s, cod_t), t-major.
struct Mor {
  Obj dom, cod;
  Vec c;
  bool operator==(const Mor&) const = default;
};

struct Subcat {
  std::vector<char> in;
  Subcat() = default;
  explicit Subcat(int n) : in(n, 0) {}
  static Subcat all(int n);
  static Subcat of(int n, const std::vector<int>& members);
  bool has(int i) const { return in[i] != 0; }
  bool contains(const Obj& X) const;
  std::vector<int> members() const;
  int n() const { return static_cast<int>(in.size()); }
  bool empty() const;
  Subcat operator&(const Subcat& o) const;
  Subcat operator|(const Subcat& o) const;
  bool subset_of(const Subcat& o) const;
  bool operator==(const Subcat&) const = default;
};

class Category;

// Biproduct of a list of objects with its structure maps.
struct Sum {
  Obj obj;
  std::vector<Mor> inj, proj;
};

// Skeletal Hom-finite additive category given by indecomposables and structure constants.
class Category {
 public:
  Elem p = 2;
  std::vector<std::string> names;

  Category() = default;
  Category(Elem p, std::vector<std::string> names);

  int n() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // -1 if absent
  std::string name(const Obj& X) const;

  int hom(int i, int j) const { return hd_[i * n() + j]; }
  void set_hom(int i, int j, int d);
  // coords in Hom(i,l) of (basis v of Hom(j,l)) o (basis u of Hom(i,j))
  Elem cc(int i, int j, int l, int u, int v, int w) const;
  Vec& comp_table(int i, int j, int l) { return comp_[(i * n() + j) * n() + l]; }
  const Vec& comp_table(int i, int j, int l) const { return comp_[(i * n() + j) * n() + l]; }
  Vec& idc(int i) { return idc_[i]; }
  const Vec& idc(int i) const { return idc_[i]; }
  // allocate zeroed tables once all hom dims are set
  void alloc_tables();
  // associativity and unit laws on all basis triples; throws DataError naming the triple
  void validate() const;

  int hom(const Obj& X, const Obj& Y) const;
  std::vector<int> offsets(const Obj& X, const Obj& Y) const;

  Mor zero(const Obj& X, const Obj& Y) const;
  Mor id(const Obj& X) const;
  Mor basis(int i, int j, int k) const;
  Mor make(const Obj& X, const Obj& Y, Vec c) const;
  Vec block(const Mor& f, int t, int s) const;
  void set_block(Mor& f, int t, int s, const Vec& v) const;

  Mor o(const Mor& g, const Mor& f) const;  // g after f
  Mor compose(const Mor& f, const Mor& g) const { return o(g, f); }
  Mor add(const Mor& a, const Mor& b) const;
  Mor sub(const Mor& a, const Mor& b) const;
  Mor neg(const Mor& a) const;
  Mor scale(const Mor& a, Elem s) const;

  // u -> g o u on Hom(X, dom g); u -> u o f on Hom(cod f, Y)
  Mat post(const Mor& g, const Obj& X) const;
  Mat pre(const Mor& f, const Obj& Y) const;

  Sum sum(const std::vector<Obj>& parts) const;
  // X -> (+)parts given componentwise, and (+)parts -> Y
  Mor column(const Sum& S, const std::vector<Mor>& fs) const;
  Mor row(const Sum& S, const std::vector<Mor>& fs) const;
  // f (+) g between sums
  Mor diag(const Sum& dom, const Sum& cod, const std::vector<Mor>& fs) const;

  bool is_iso(const Mor& f) const;

 private:
  std::vector<int> hd_;
  std::vector<Vec> comp_;
  std::vector<Vec> idc_;
};

}  // namespace extricat
