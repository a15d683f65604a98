#include "extricat/extri/et.hpp"

#include <algorithm>

#include "extricat/exactcat/errors.hpp"
#include "extricat/exactcat/linsys.hpp"

namespace extricat {

ExtStructure::ExtStructure(const Category* C) : C_(C), n_(C->n()) {
  dim_.assign(n_ * n_, 0);
  base_.assign(n_ * n_, 0);
  int acc = 0;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      base_[j * n_ + i] = acc;
      acc += C->hom(j, i);
    }
}

void ExtStructure::alloc() {
  int total = 0;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) total += C_->hom(j, i);
  ract_.assign(static_cast<size_t>(total) * n_, Mat());
  lact_.assign(static_cast<size_t>(total) * n_, Mat());
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < C_->hom(j, i); ++k)
        for (int X = 0; X < n_; ++X) {
          ract(j, i, k, X) = Mat(dim(j, X), dim(i, X), C_->p);
          lact(j, i, k, X) = Mat(dim(X, i), dim(X, j), C_->p);
        }
}

int ExtStructure::dim(const Obj& C, const Obj& A) const {
  int d = 0;
  for (int t : A.s)
    for (int s : C.s) d += dim(s, t);
  return d;
}

std::vector<int> ExtStructure::offsets(const Obj& C, const Obj& A) const {
  std::vector<int> off(static_cast<size_t>(C.size()) * A.size() + 1, 0);
  int k = 0;
  for (int t = 0; t < A.size(); ++t)
    for (int s = 0; s < C.size(); ++s, ++k) off[k + 1] = off[k] + dim(C[s], A[t]);
  return off;
}

Vec ExtStructure::block(const ExtElem& d, int t, int s) const {
  auto off = offsets(d.C, d.A);
  int k = t * d.C.size() + s;
  return Vec(d.c.begin() + off[k], d.c.begin() + off[k + 1]);
}

ExtElem ExtStructure::make(const Obj& C, const Obj& A, Vec c) const {
  if (static_cast<int>(c.size()) != dim(C, A))
    throw DomainError("extension in E(" + C_->name(C) + "," + C_->name(A) + ") needs " + std::to_string(dim(C, A)) +
                      " coordinates");
  return ExtElem{C, A, std::move(c)};
}

ExtElem ExtStructure::right(const ExtElem& d, const Mor& b) const {
  if (!(b.cod == d.C)) throw DomainError("delta b: codomain of b is not the third term of delta");
  const Obj &Y = b.dom, &C = d.C, &A = d.A;
  ExtElem out = zero(Y, A);
  auto od = offsets(C, A), oo = offsets(Y, A), ob = C_->offsets(Y, C);
  Elem p = C_->p;
  for (int t = 0; t < A.size(); ++t)
    for (int r = 0; r < Y.size(); ++r) {
      Elem* o = out.c.data() + oo[t * Y.size() + r];
      int dout = dim(Y[r], A[t]);
      if (!dout) continue;
      for (int s = 0; s < C.size(); ++s) {
        int hb = C_->hom(Y[r], C[s]);
        int din = dim(C[s], A[t]);
        if (!hb || !din) continue;
        const Elem* bb = b.c.data() + ob[s * Y.size() + r];
        const Elem* dd = d.c.data() + od[t * C.size() + s];
        for (int k = 0; k < hb; ++k) {
          if (!bb[k]) continue;
          const Mat& M = ract(Y[r], C[s], k, A[t]);
          for (int i = 0; i < dout; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < din; ++j) acc += static_cast<std::uint64_t>(M.at(i, j)) * dd[j];
            o[i] = fadd(o[i], fmul(bb[k], static_cast<Elem>(acc % p), p), p);
          }
        }
      }
    }
  return out;
}

ExtElem ExtStructure::left(const Mor& a, const ExtElem& d) const {
  if (!(a.dom == d.A)) throw DomainError("a delta: domain of a is not the first term of delta");
  const Obj &A = d.A, &A2 = a.cod, &C = d.C;
  ExtElem out = zero(C, A2);
  auto od = offsets(C, A), oo = offsets(C, A2), oa = C_->offsets(A, A2);
  Elem p = C_->p;
  for (int u = 0; u < A2.size(); ++u)
    for (int s = 0; s < C.size(); ++s) {
      Elem* o = out.c.data() + oo[u * C.size() + s];
      int dout = dim(C[s], A2[u]);
      if (!dout) continue;
      for (int t = 0; t < A.size(); ++t) {
        int ha = C_->hom(A[t], A2[u]);
        int din = dim(C[s], A[t]);
        if (!ha || !din) continue;
        const Elem* aa = a.c.data() + oa[u * A.size() + t];
        const Elem* dd = d.c.data() + od[t * C.size() + s];
        for (int k = 0; k < ha; ++k) {
          if (!aa[k]) continue;
          const Mat& M = lact(A[t], A2[u], k, C[s]);
          for (int i = 0; i < dout; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < din; ++j) acc += static_cast<std::uint64_t>(M.at(i, j)) * dd[j];
            o[i] = fadd(o[i], fmul(aa[k], static_cast<Elem>(acc % p), p), p);
          }
        }
      }
    }
  return out;
}

ExtElem ExtStructure::add(const ExtElem& x, const ExtElem& y) const {
  if (!(x.C == y.C) || !(x.A == y.A)) throw DomainError("adding extensions in different E spaces");
  return ExtElem{x.C, x.A, vadd(x.c, y.c, C_->p)};
}

ExtElem ExtStructure::sub(const ExtElem& x, const ExtElem& y) const {
  if (!(x.C == y.C) || !(x.A == y.A)) throw DomainError("subtracting extensions in different E spaces");
  return ExtElem{x.C, x.A, vsub(x.c, y.c, C_->p)};
}

ExtElem ExtStructure::neg(const ExtElem& x) const { return ExtElem{x.C, x.A, vscale(x.c, C_->p - 1, C_->p)}; }

Mat ExtStructure::pre(const Mor& b, const Obj& A) const {
  return matrix_of(dim(b.cod, A), dim(b.dom, A), C_->p, [&](const Vec& v) { return right(ExtElem{b.cod, A, v}, b).c; });
}

Mat ExtStructure::post(const Mor& a, const Obj& C) const {
  return matrix_of(dim(C, a.dom), dim(C, a.cod), C_->p, [&](const Vec& v) { return left(a, ExtElem{C, a.dom, v}).c; });
}

Mat ExtStructure::on_pre(const ExtElem& d, const Obj& Y) const {
  return matrix_of(C_->hom(Y, d.C), dim(Y, d.A), C_->p, [&](const Vec& v) { return right(d, Mor{Y, d.C, v}).c; });
}

Mat ExtStructure::on_post(const ExtElem& d, const Obj& A2) const {
  return matrix_of(C_->hom(d.A, A2), dim(d.C, A2), C_->p, [&](const Vec& v) { return left(Mor{d.A, A2, v}, d).c; });
}

Report ExtStructure::validate_bifunctor() const {
  Report r("ET1 bifunctor");
  const Category& C = *C_;
  auto nm = [&](int i) { return C.names[i]; };
  for (int c = 0; c < n_; ++c)
    for (int a = 0; a < n_; ++a)
      for (int k = 0; k < dim(c, a); ++k) {
        ExtElem d{Obj::of(c), Obj::of(a), unit(dim(c, a), k)};
        ++r.cases;
        if (!(right(d, C.id(d.C)) == d) || !(left(C.id(d.A), d) == d)) {
          r.fail("identity does not act trivially on basis " + std::to_string(k) + " of E(" + nm(c) + "," + nm(a) + ")");
          return r;
        }
        for (int y = 0; y < n_; ++y)
          for (int u = 0; u < C.hom(y, c); ++u) {
            Mor b = C.basis(y, c, u);
            ExtElem db = right(d, b);
            for (int w = 0; w < n_; ++w) {
              for (int v = 0; v < C.hom(w, y); ++v) {
                ++r.cases;
                Mor b2 = C.basis(w, y, v);
                if (!(right(db, b2) == right(d, C.o(b, b2)))) {
                  r.fail("(delta b) b' != delta (b b') for delta in E(" + nm(c) + "," + nm(a) + "), b: " + nm(y) + "->" +
                         nm(c) + ", b': " + nm(w) + "->" + nm(y));
                  return r;
                }
              }
              for (int v = 0; v < C.hom(a, w); ++v) {
                ++r.cases;
                Mor a2 = C.basis(a, w, v);
                if (!(left(a2, db) == right(left(a2, d), b))) {
                  r.fail("a (delta b) != (a delta) b for delta in E(" + nm(c) + "," + nm(a) + ")");
                  return r;
                }
              }
            }
          }
        for (int y = 0; y < n_; ++y)
          for (int u = 0; u < C.hom(a, y); ++u) {
            Mor a1 = C.basis(a, y, u);
            ExtElem ad = left(a1, d);
            for (int w = 0; w < n_; ++w)
              for (int v = 0; v < C.hom(y, w); ++v) {
                ++r.cases;
                Mor a2 = C.basis(y, w, v);
                if (!(left(a2, ad) == left(C.o(a2, a1), d))) {
                  r.fail("a' (a delta) != (a' a) delta for delta in E(" + nm(c) + "," + nm(a) + ")");
                  return r;
                }
              }
          }
      }
  return r;
}

void Realizer::insert(const Category& C, Conflation c) {
  (void)C;
  Key k{c.delta.C.s, c.delta.A.s, c.delta.c};
  auto it = table_.find(k);
  if (it == table_.end()) {
    table_.emplace(std::move(k), std::move(c));
  } else if (conflation_before(c, it->second)) {
    it->second = std::move(c);
  }
}

void Realizer::replace(const Conflation& c) {
  Key k{c.delta.C.s, c.delta.A.s, c.delta.c};
  table_[k] = c;
  std::lock_guard<std::mutex> lk(mu_);
  cache_.erase(k);
}

void Realizer::set_model(Model m, std::string name) {
  model_ = std::move(m);
  model_name_ = std::move(name);
}

bool Realizer::stored(const ExtElem& d) const { return table_.count(Key{d.C.s, d.A.s, d.c}) > 0; }

Conflation Realizer::get(const Category& C, const ExtElem& d) const {
  Key k{d.C.s, d.A.s, d.c};
  if (auto it = table_.find(k); it != table_.end()) return it->second;
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  }
  if (vzero(d.c)) return split_conflation(C, d);
  if (!model_)
    throw TableIncomplete("no realization stored for the class " + json(d.c).dump() + " in E(" + C.name(d.C) + "," +
                          C.name(d.A) + ")");
  Conflation c = model_(d);
  std::lock_guard<std::mutex> lk(mu_);
  cache_.emplace(k, c);
  return c;
}

std::vector<Conflation> Realizer::records() const {
  std::vector<Conflation> out;
  for (auto& [k, c] : table_) out.push_back(c);
  return out;
}

Conflation split_conflation(const Category& C, const ExtElem& d) {
  Sum S = C.sum({d.A, d.C});
  return Conflation{S.inj[0], S.proj[1], d};
}

bool conflation_before(const Conflation& a, const Conflation& b) {
  return std::tie(a.x.cod.s, a.x.c, a.y.c) < std::tie(b.x.cod.s, b.x.c, b.y.c);
}

bool equivalent(const Category& C, const Conflation& a, const Conflation& b) {
  if (!(a.A() == b.A()) || !(a.C() == b.C())) return false;
  if (a.B().size() != b.B().size() || !(a.B() == b.B())) return false;
  LinSys L(C.p);
  int e = L.var(C.hom(a.B(), b.B()));
  L.eq({{e, C.pre(a.x, b.B())}}, b.x.c);
  L.eq({{e, C.post(b.y, a.B())}}, a.y.c);
  auto s = L.solve();
  if (!s) return false;
  return C.is_iso(Mor{a.B(), b.B(), L.get(s->x0, e)});
}

ETCat::ETCat(Category c) : C(std::move(c)), E(&C) {}

std::vector<Obj> ETCat::objects(int bound, const Subcat* within) const {
  std::vector<int> pool;
  for (int i = 0; i < n(); ++i)
    if (!within || within->has(i)) pool.push_back(i);
  std::vector<Obj> out{Obj()};
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == bound) return;
    for (size_t k = start; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      out.push_back(Obj(cur));
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), obj_before);
  return out;
}

void ETCat::for_each_ext(const Obj& Cobj, const Obj& A, const std::function<bool(const ExtElem&)>& f) const {
  for_each_vector(E.dim(Cobj, A), p(), "E(" + C.name(Cobj) + "," + C.name(A) + ")",
                  [&](const Vec& v) { return f(ExtElem{Cobj, A, v}); });
}

json ETCat::ext_json(const ExtElem& d) const {
  return json{{"C", C.name(d.C)}, {"A", C.name(d.A)}, {"coords", d.c}};
}

json ETCat::conf_json(const Conflation& c) const {
  return json{{"delta", ext_json(c.delta)}, {"x", mor_json(C, c.x)}, {"y", mor_json(C, c.y)}};
}

}  // namespace extricat
