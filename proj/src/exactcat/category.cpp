#include "extricat/exactcat/category.hpp"

#include <algorithm>
#include <numeric>

#include "extricat/exactcat/errors.hpp"

namespace extricat {

Obj::Obj(std::vector<int> v) : s(std::move(v)) { std::sort(s.begin(), s.end()); }

Obj operator+(const Obj& a, const Obj& b) {
  std::vector<int> v = a.s;
  v.insert(v.end(), b.s.begin(), b.s.end());
  return Obj(std::move(v));
}

bool obj_before(const Obj& a, const Obj& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.s < b.s;
}

Subcat Subcat::all(int n) {
  Subcat s(n);
  std::fill(s.in.begin(), s.in.end(), 1);
  return s;
}

Subcat Subcat::of(int n, const std::vector<int>& members) {
  Subcat s(n);
  for (int m : members) s.in.at(m) = 1;
  return s;
}

bool Subcat::contains(const Obj& X) const {
  for (int i : X.s)
    if (!has(i)) return false;
  return true;
}

std::vector<int> Subcat::members() const {
  std::vector<int> m;
  for (int i = 0; i < n(); ++i)
    if (in[i]) m.push_back(i);
  return m;
}

bool Subcat::empty() const { return members().empty(); }

Subcat Subcat::operator&(const Subcat& o) const {
  Subcat r(n());
  for (int i = 0; i < n(); ++i) r.in[i] = in[i] && o.in[i];
  return r;
}

Subcat Subcat::operator|(const Subcat& o) const {
  Subcat r(n());
  for (int i = 0; i < n(); ++i) r.in[i] = in[i] || o.in[i];
  return r;
}

bool Subcat::subset_of(const Subcat& o) const {
  for (int i = 0; i < n(); ++i)
    if (in[i] && !o.in[i]) return false;
  return true;
}

Category::Category(Elem pp, std::vector<std::string> nm) : p(pp), names(std::move(nm)) {
  hd_.assign(n() * n(), 0);
}

int Category::index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names[i] == name) return i;
  return -1;
}

std::string Category::name(const Obj& X) const {
  if (X.empty()) return "0";
  std::string s;
  for (int k = 0; k < X.size(); ++k) s += (k ? "+" : "") + names[X[k]];
  return s;
}

void Category::set_hom(int i, int j, int d) { hd_[i * n() + j] = d; }

void Category::alloc_tables() {
  int N = n();
  comp_.assign(static_cast<size_t>(N) * N * N, {});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < N; ++l) comp_table(i, j, l).assign(static_cast<size_t>(hom(i, j)) * hom(j, l) * hom(i, l), 0);
  idc_.assign(N, {});
  for (int i = 0; i < N; ++i) idc_[i].assign(hom(i, i), 0);
}

Elem Category::cc(int i, int j, int l, int u, int v, int w) const {
  return comp_table(i, j, l)[(static_cast<size_t>(u) * hom(j, l) + v) * hom(i, l) + w];
}

void Category::validate() const {
  auto tag = [&](int i, int j, int l) { return names[i] + "," + names[j] + "," + names[l]; };
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) {
      for (int u = 0; u < hom(i, j); ++u) {
        Mor f = basis(i, j, u);
        if (!(o(id(Obj::of(j)), f) == f) || !(o(f, id(Obj::of(i))) == f))
          throw DataError("unit law fails for basis " + std::to_string(u) + " of Hom(" + names[i] + "," + names[j] + ")");
      }
      for (int l = 0; l < n(); ++l)
        for (int m = 0; m < n(); ++m)
          for (int u = 0; u < hom(i, j); ++u)
            for (int v = 0; v < hom(j, l); ++v)
              for (int w = 0; w < hom(l, m); ++w) {
                Mor a = basis(i, j, u), b = basis(j, l, v), c = basis(l, m, w);
                if (!(o(c, o(b, a)) == o(o(c, b), a)))
                  throw DataError("associativity fails on basis triple (" + std::to_string(u) + "," + std::to_string(v) + "," +
                                  std::to_string(w) + ") over " + tag(i, j, l) + "," + names[m]);
              }
    }
}

int Category::hom(const Obj& X, const Obj& Y) const {
  int d = 0;
  for (int t : Y.s)
    for (int s : X.s) d += hom(s, t);
  return d;
}

std::vector<int> Category::offsets(const Obj& X, const Obj& Y) const {
  std::vector<int> off(static_cast<size_t>(X.size()) * Y.size() + 1, 0);
  int k = 0;
  for (int t = 0; t < Y.size(); ++t)
    for (int s = 0; s < X.size(); ++s, ++k) off[k + 1] = off[k] + hom(X[s], Y[t]);
  return off;
}

Mor Category::zero(const Obj& X, const Obj& Y) const { return Mor{X, Y, Vec(hom(X, Y), 0)}; }

Mor Category::id(const Obj& X) const {
  Mor f = zero(X, X);
  for (int s = 0; s < X.size(); ++s) set_block(f, s, s, idc(X[s]));
  return f;
}

Mor Category::basis(int i, int j, int k) const {
  Mor f = zero(Obj::of(i), Obj::of(j));
  f.c.at(k) = 1;
  return f;
}

Mor Category::make(const Obj& X, const Obj& Y, Vec c) const {
  if (static_cast<int>(c.size()) != hom(X, Y))
    throw DomainError("morphism " + name(X) + " -> " + name(Y) + " needs " + std::to_string(hom(X, Y)) + " coordinates");
  return Mor{X, Y, std::move(c)};
}

Vec Category::block(const Mor& f, int t, int s) const {
  auto off = offsets(f.dom, f.cod);
  int k = t * f.dom.size() + s;
  return Vec(f.c.begin() + off[k], f.c.begin() + off[k + 1]);
}

void Category::set_block(Mor& f, int t, int s, const Vec& v) const {
  auto off = offsets(f.dom, f.cod);
  int k = t * f.dom.size() + s;
  if (static_cast<int>(v.size()) != off[k + 1] - off[k]) throw DomainError("set_block: size mismatch");
  std::copy(v.begin(), v.end(), f.c.begin() + off[k]);
}

Mor Category::o(const Mor& g, const Mor& f) const {
  if (!(f.cod == g.dom))
    throw DomainError("compose: codomain " + name(f.cod) + " does not match domain " + name(g.dom));
  const Obj &X = f.dom, &Y = f.cod, &Z = g.cod;
  Mor h = zero(X, Z);
  auto of = offsets(X, Y), og = offsets(Y, Z), oh = offsets(X, Z);
  for (int u = 0; u < Z.size(); ++u)
    for (int s = 0; s < X.size(); ++s) {
      int hs = X[s], hu = Z[u], dh = hom(hs, hu);
      if (!dh) continue;
      Elem* out = h.c.data() + oh[u * X.size() + s];
      for (int t = 0; t < Y.size(); ++t) {
        int ht = Y[t], df = hom(hs, ht), dg = hom(ht, hu);
        if (!df || !dg) continue;
        const Elem* fa = f.c.data() + of[t * X.size() + s];
        const Elem* gb = g.c.data() + og[u * Y.size() + t];
        const Vec& tab = comp_table(hs, ht, hu);
        for (int a = 0; a < df; ++a) {
          if (!fa[a]) continue;
          for (int b = 0; b < dg; ++b) {
            if (!gb[b]) continue;
            Elem coef = fmul(fa[a], gb[b], p);
            const Elem* row = tab.data() + (static_cast<size_t>(a) * dg + b) * dh;
            for (int w = 0; w < dh; ++w)
              if (row[w]) out[w] = fadd(out[w], fmul(coef, row[w], p), p);
          }
        }
      }
    }
  return h;
}

Mor Category::add(const Mor& a, const Mor& b) const {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) throw DomainError("add: morphisms are not parallel");
  return Mor{a.dom, a.cod, vadd(a.c, b.c, p)};
}

Mor Category::sub(const Mor& a, const Mor& b) const {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) throw DomainError("sub: morphisms are not parallel");
  return Mor{a.dom, a.cod, vsub(a.c, b.c, p)};
}

Mor Category::neg(const Mor& a) const { return Mor{a.dom, a.cod, vscale(a.c, p - 1, p)}; }

Mor Category::scale(const Mor& a, Elem s) const { return Mor{a.dom, a.cod, vscale(a.c, s % p, p)}; }

Mat Category::post(const Mor& g, const Obj& X) const {
  return matrix_of(hom(X, g.dom), hom(X, g.cod), p, [&](const Vec& v) { return o(g, Mor{X, g.dom, v}).c; });
}

Mat Category::pre(const Mor& f, const Obj& Y) const {
  return matrix_of(hom(f.cod, Y), hom(f.dom, Y), p, [&](const Vec& v) { return o(Mor{f.cod, Y, v}, f).c; });
}

Sum Category::sum(const std::vector<Obj>& parts) const {
  struct Item { int idx, part, pos; };
  std::vector<Item> items;
  for (int k = 0; k < static_cast<int>(parts.size()); ++k)
    for (int q = 0; q < parts[k].size(); ++q) items.push_back({parts[k][q], k, q});
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.idx < b.idx; });
  Sum S;
  for (auto& it : items) S.obj.s.push_back(it.idx);
  for (auto& P : parts) {
    S.inj.push_back(zero(P, S.obj));
    S.proj.push_back(zero(S.obj, P));
  }
  for (int r = 0; r < static_cast<int>(items.size()); ++r) {
    auto& it = items[r];
    set_block(S.inj[it.part], r, it.pos, idc(it.idx));
    set_block(S.proj[it.part], it.pos, r, idc(it.idx));
  }
  return S;
}

Mor Category::column(const Sum& S, const std::vector<Mor>& fs) const {
  if (fs.size() != S.inj.size() || fs.empty()) throw DomainError("column: wrong number of components");
  Mor h = zero(fs[0].dom, S.obj);
  for (size_t k = 0; k < fs.size(); ++k) h = add(h, o(S.inj[k], fs[k]));
  return h;
}

Mor Category::row(const Sum& S, const std::vector<Mor>& fs) const {
  if (fs.size() != S.proj.size() || fs.empty()) throw DomainError("row: wrong number of components");
  Mor h = zero(S.obj, fs[0].cod);
  for (size_t k = 0; k < fs.size(); ++k) h = add(h, o(fs[k], S.proj[k]));
  return h;
}

Mor Category::diag(const Sum& A, const Sum& B, const std::vector<Mor>& fs) const {
  if (fs.size() != A.proj.size() || fs.size() != B.inj.size()) throw DomainError("diag: wrong number of components");
  Mor h = zero(A.obj, B.obj);
  for (size_t k = 0; k < fs.size(); ++k) h = add(h, o(B.inj[k], o(fs[k], A.proj[k])));
  return h;
}

bool Category::is_iso(const Mor& f) const {
  // g with g f = id and f g = id, solved jointly
  int d = hom(f.cod, f.dom);
  Mat A = pre(f, f.dom).vcat(post(f, f.cod));
  Vec rhs = id(f.dom).c;
  auto idY = id(f.cod).c;
  rhs.insert(rhs.end(), idY.begin(), idY.end());
  if (A.cols() != d) throw DomainError("is_iso: internal shape");
  return A.solve(rhs).has_value();
}

}  // namespace extricat
