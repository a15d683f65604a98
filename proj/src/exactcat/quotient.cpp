#include "extricat/exactcat/quotient.hpp"

#include <functional>

#include "extricat/exactcat/errors.hpp"
#include "extricat/exactcat/linsys.hpp"

namespace extricat {

Quotient::Quotient(const Category& C, Subcat I) : C_(&C), I_(std::move(I)) {
  int n = C.n();
  if (I_.n() != n) throw DomainError("ideal subcategory has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Vec> gens;
      for (int k : I_.members())
        for (int u = 0; u < C.hom(i, k); ++u)
          for (int v = 0; v < C.hom(k, j); ++v) gens.push_back(C.o(C.basis(k, j, v), C.basis(i, k, u)).c);
      span_.emplace_back(C.hom(i, j), C.p, gens);
      std::vector<char> piv(C.hom(i, j), 0);
      for (int c : span_.back().pivots) piv[c] = 1;
      std::vector<int> fr;
      for (int c = 0; c < C.hom(i, j); ++c)
        if (!piv[c]) fr.push_back(c);
      free_.push_back(fr);
    }
}

int Quotient::qdim(const Obj& X, const Obj& Y) const {
  int d = 0;
  for (int t : Y.s)
    for (int s : X.s) d += qdim(s, t);
  return d;
}

std::vector<Vec> Quotient::ideal_basis(int i, int j) const {
  const Span& S = span_[key(i, j)];
  std::vector<Vec> out;
  for (int r = 0; r < S.R.rows(); ++r) out.push_back(S.R.row(r));
  return out;
}

Vec Quotient::reduce(const Mor& f) const {
  Vec q;
  auto off = C_->offsets(f.dom, f.cod);
  int k = 0;
  for (int t = 0; t < f.cod.size(); ++t)
    for (int s = 0; s < f.dom.size(); ++s, ++k) {
      int K = key(f.dom[s], f.cod[t]);
      Vec b(f.c.begin() + off[k], f.c.begin() + off[k + 1]);
      Vec r = span_[K].reduce(b);
      for (int c : free_[K]) q.push_back(r[c]);
    }
  return q;
}

Mat Quotient::proj(const Obj& X, const Obj& Y) const {
  return matrix_of(C_->hom(X, Y), qdim(X, Y), p(), [&](const Vec& v) { return reduce(Mor{X, Y, v}); });
}

Mor Quotient::lift(const Obj& X, const Obj& Y, const Vec& q) const {
  Mor f = C_->zero(X, Y);
  auto off = C_->offsets(X, Y);
  int k = 0, pos = 0;
  for (int t = 0; t < Y.size(); ++t)
    for (int s = 0; s < X.size(); ++s, ++k)
      for (int c : free_[key(X[s], Y[t])]) f.c[off[k] + c] = q.at(pos++);
  if (pos != static_cast<int>(q.size())) throw DomainError("lift: wrong number of quotient coordinates");
  return f;
}

bool Quotient::is_zero(const Mor& f) const { return vzero(reduce(f)); }

bool Quotient::eq(const Mor& f, const Mor& g) const { return is_zero(C_->sub(f, g)); }

bool Quotient::is_zero_object(const Obj& X) const { return is_zero(C_->id(X)); }

Obj Quotient::strip(const Obj& X) const {
  std::vector<int> v;
  for (int i : X.s)
    if (!I_.has(i)) v.push_back(i);
  return Obj(v);
}

std::vector<Vec> ideal_via_objects(const Category& C, const Subcat& I, int i, int j, int mult) {
  std::vector<Vec> gens;
  auto mem = I.members();
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (!cur.empty()) {
      Obj K(cur);
      Obj X = Obj::of(i), Y = Obj::of(j);
      for (int a = 0; a < C.hom(X, K); ++a)
        for (int b = 0; b < C.hom(K, Y); ++b) {
          Mor u = C.zero(X, K), v = C.zero(K, Y);
          u.c[a] = 1;
          v.c[b] = 1;
          gens.push_back(C.o(v, u).c);
        }
    }
    if (static_cast<int>(cur.size()) == mult) return;
    for (size_t k = start; k < mem.size(); ++k) {
      cur.push_back(mem[k]);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  Span S(C.hom(i, j), C.p, gens);
  std::vector<Vec> out;
  for (int r = 0; r < S.R.rows(); ++r) out.push_back(S.R.row(r));
  return out;
}

IsoWitness is_iso_mod_ideal(const Mor& f, const Quotient& Q) {
  const Category& C = Q.base();
  LinSys L(C.p);
  int g = L.var(C.hom(f.cod, f.dom));
  L.eq({{g, Q.proj(f.dom, f.dom) * C.pre(f, f.dom)}}, Q.reduce(C.id(f.dom)));
  L.eq({{g, Q.proj(f.cod, f.cod) * C.post(f, f.cod)}}, Q.reduce(C.id(f.cod)));
  auto s = L.solve();
  if (!s) return {};
  return {true, Mor{f.cod, f.dom, L.get(s->x0, g)}};
}

}  // namespace extricat
