#include "extricat/exactcat/functor.hpp"

#include "extricat/exactcat/errors.hpp"

namespace extricat {

void Report::absorb(const Report& r) {
  cases += r.cases;
  if (!r.ran && ran && pass) {
    ran = false;
    pass = false;
    detail = r.check + ": " + r.detail;
    return;
  }
  if (!r.pass && pass) {
    pass = false;
    detail = (r.check.empty() ? "" : r.check + ": ") + r.detail;
    witness = r.witness;
  }
}

json Report::to_json() const {
  json j;
  j["check"] = check;
  j["verdict"] = !ran ? "not-run" : (pass ? "pass" : "fail");
  j["cases"] = cases;
  if (!detail.empty()) j["detail"] = detail;
  if (!witness.empty()) j["witness"] = witness;
  return j;
}

json obj_json(const Category& C, const Obj& X) { return C.name(X); }

json mor_json(const Category& C, const Mor& f) {
  json j;
  j["dom"] = C.name(f.dom);
  j["cod"] = C.name(f.cod);
  j["coords"] = f.c;
  return j;
}

Obj FunctorData::on(const Obj& X) const {
  std::vector<int> v;
  for (int i : X.s) {
    if (!domain.has(i)) throw DomainError(name + " is not defined on " + src->base().names[i]);
    v.insert(v.end(), obj[i].s.begin(), obj[i].s.end());
  }
  return Obj(v);
}

Mor FunctorData::on(const Mor& f) const {
  const Category& S = src->base();
  const Category& D = dst->base();
  std::vector<Obj> dp, cp;
  for (int i : f.dom.s) dp.push_back(obj.at(i));
  for (int i : f.cod.s) cp.push_back(obj.at(i));
  Obj FX = on(f.dom), FY = on(f.cod);
  if (dp.empty() || cp.empty()) return D.zero(FX, FY);
  Sum A = D.sum(dp), B = D.sum(cp);
  Mor out = D.zero(FX, FY);
  for (int t = 0; t < f.cod.size(); ++t)
    for (int s = 0; s < f.dom.size(); ++s) {
      Vec b = S.block(f, t, s);
      if (vzero(b)) continue;
      const Mat& M = mor.at({f.dom[s], f.cod[t]});
      Mor g{obj[f.dom[s]], obj[f.cod[t]], M * b};
      out = D.add(out, D.o(B.inj[t], D.o(g, A.proj[s])));
    }
  return out;
}

FunctorData identity_functor(const Quotient& Q, const Subcat& domain, const std::string& name) {
  FunctorData F{name, &Q, &Q, domain, {}, {}};
  const Category& C = Q.base();
  for (int i = 0; i < C.n(); ++i) F.obj.push_back(Obj::of(i));
  for (int i : domain.members())
    for (int j : domain.members()) F.mor[{i, j}] = Mat::identity(C.hom(i, j), C.p);
  return F;
}

FunctorData compose_functors(const FunctorData& G, const FunctorData& F, const std::string& name) {
  FunctorData H{name, F.src, G.dst, F.domain, {}, {}};
  const Category& S = F.src->base();
  H.obj.assign(S.n(), Obj());
  for (int i : F.domain.members()) H.obj[i] = G.on(F.obj[i]);
  for (int i : F.domain.members())
    for (int j : F.domain.members())
      H.mor[{i, j}] = matrix_of(S.hom(i, j), G.dst->base().hom(H.obj[i], H.obj[j]), S.p, [&](const Vec& v) {
        return G.on(F.on(Mor{Obj::of(i), Obj::of(j), v})).c;
      });
  return H;
}

Mor NatTransData::at(const Obj& X) const {
  const Category& D = F->dst->base();
  Obj FX = F->on(X), GX = G->on(X);
  if (X.empty()) return D.zero(FX, GX);
  std::vector<Obj> fp, gp;
  for (int i : X.s) {
    fp.push_back(F->obj[i]);
    gp.push_back(G->obj[i]);
  }
  std::vector<Mor> cs;
  for (int i : X.s) cs.push_back(comp.at(i));
  return D.diag(D.sum(fp), D.sum(gp), cs);
}

Report check_functor(const FunctorData& F) {
  Report r("functor " + F.name);
  const Category& S = F.src->base();
  const Category& D = F.dst->base();
  const Quotient& Q = *F.dst;
  auto nm = [&](int i) { return S.names[i]; };
  for (int i : F.domain.members()) {
    ++r.cases;
    Mor Fi = F.on(S.id(Obj::of(i)));
    if (!Q.eq(Fi, D.id(F.obj[i]))) {
      r.fail(F.name + " does not preserve id_" + nm(i), {{"object", nm(i)}, {"image", mor_json(D, Fi)}});
      return r;
    }
    for (int j : F.domain.members())
      for (const Vec& k : F.src->ideal_basis(i, j)) {
        ++r.cases;
        Mor u{Obj::of(i), Obj::of(j), k};
        if (!Q.is_zero(F.on(u))) {
          r.fail(F.name + " sends an ideal morphism " + nm(i) + "->" + nm(j) + " to a nonzero map",
                 {{"morphism", mor_json(S, u)}});
          return r;
        }
      }
  }
  for (int i : F.domain.members())
    for (int j : F.domain.members())
      for (int l : F.domain.members())
        for (int u = 0; u < S.hom(i, j); ++u)
          for (int v = 0; v < S.hom(j, l); ++v) {
            ++r.cases;
            Mor a = S.basis(i, j, u), b = S.basis(j, l, v);
            if (!Q.eq(F.on(S.o(b, a)), D.o(F.on(b), F.on(a)))) {
              r.fail(F.name + " does not preserve the composite of basis " + std::to_string(u) + " of Hom(" + nm(i) + "," +
                         nm(j) + ") and basis " + std::to_string(v) + " of Hom(" + nm(j) + "," + nm(l) + ")",
                     {{"first", mor_json(S, a)}, {"second", mor_json(S, b)}});
              return r;
            }
          }
  return r;
}

Report check_natural(const NatTransData& eta, bool require_iso) {
  Report r("natural " + eta.name);
  const FunctorData &F = *eta.F, &G = *eta.G;
  const Category& S = F.src->base();
  const Category& D = F.dst->base();
  const Quotient& Q = *F.dst;
  for (int i : F.domain.members()) {
    if (require_iso) {
      ++r.cases;
      if (!is_iso_mod_ideal(eta.comp[i], Q).iso) {
        r.fail(eta.name + " component at " + S.names[i] + " is not invertible", {{"component", mor_json(D, eta.comp[i])}});
        return r;
      }
    }
    for (int j : F.domain.members())
      for (int u = 0; u < S.hom(i, j); ++u) {
        ++r.cases;
        Mor a = S.basis(i, j, u);
        if (!Q.eq(D.o(eta.comp[j], F.on(a)), D.o(G.on(a), eta.comp[i]))) {
          r.fail(eta.name + " naturality square fails for basis " + std::to_string(u) + " of Hom(" + S.names[i] + "," +
                     S.names[j] + ")",
                 {{"morphism", mor_json(S, a)}});
          return r;
        }
      }
  }
  return r;
}

}  // namespace extricat
