#include "extricat/workbench/generators.hpp"

#include "extricat/exactcat/errors.hpp"
#include "extricat/exactcat/linsys.hpp"
#include "extricat/extri/relative.hpp"
#include "extricat/workbench/ses_oracle.hpp"

namespace extricat::workbench {

namespace {

std::vector<int> lens(const Obj& X) {
  std::vector<int> v;
  for (int i : X.s) v.push_back(i + 1);
  return v;
}

std::string tag(int n, Elem p) { return "n" + std::to_string(n) + "-p" + std::to_string(p); }

void guard(int n, Elem p) {
  if (n < 1 || !is_prime(p)) throw DomainError("need n >= 1 and p prime");
  if (n > 6 || p > 7) throw CapExceeded("size guard: Nakayama generators stop at n = 6, p = 7");
}

// does the category presentation agree entry by entry
bool same_category(const Category& A, const Category& B) {
  if (A.p != B.p || A.names != B.names) return false;
  for (int i = 0; i < A.n(); ++i) {
    if (A.idc(i) != B.idc(i)) return false;
    for (int j = 0; j < A.n(); ++j) {
      if (A.hom(i, j) != B.hom(i, j)) return false;
      for (int l = 0; l < A.n(); ++l)
        if (A.comp_table(i, j, l) != B.comp_table(i, j, l)) return false;
    }
  }
  return true;
}

std::optional<Mor> iso_in(const Category& C, const LinSys& L, int v, const Obj& X, const Obj& Y,
                          const std::string& what) {
  auto sol = L.solve();
  if (!sol) return std::nullopt;
  auto hit = search_solution(*sol, C.p, what, [&](const Vec& x) { return C.is_iso(Mor{X, Y, L.get(x, v)}); });
  if (!hit) return std::nullopt;
  return Mor{X, Y, L.get(*hit, v)};
}

}  // namespace

// ---- Nakayama ----

Report nakayama_oracle_check(const nakayama::Model& m, const ETCat& et, int bound) {
  Report r("SES oracle agreement");
  for (const Obj& C : et.objects(bound))
    for (const Obj& A : et.objects(bound)) {
      if (C.empty() || A.empty() || C.size() + A.size() > bound) continue;
      // the brute force stays small; pairs of indecomposables are always covered
      bool must = C.size() == 1 && A.size() == 1;
      if (!must && m.dim(C) + m.dim(A) > (m.p() == 2 ? 6 : 5)) continue;
      oracle::SesCount cnt;
      try {
        cnt = oracle::ses_classes(lens(C), lens(A), m.n(), m.p());
      } catch (const CapExceeded&) {
        if (must) throw;
        continue;
      }
      ++r.cases;
      std::uint64_t sz = 1;
      for (int k = 0; k < et.E.dim(C, A); ++k) sz *= m.p();
      if (sz != cnt.classes) {
        r.fail("Ext dimension disagrees with the SES count",
               {{"C", et.C.name(C)}, {"A", et.C.name(A)}, {"classes", cnt.classes}, {"table", sz}});
        return r;
      }
      std::map<std::vector<int>, std::uint64_t> mids;
      et.for_each_ext(C, A, [&](const ExtElem& d) {
        ++mids[lens(et.realize(d).B())];
        return true;
      });
      if (mids != cnt.middle) {
        r.fail("middle terms disagree with the SES enumeration", {{"C", et.C.name(C)}, {"A", et.C.name(A)}});
        return r;
      }
    }
  for (const Conflation& c : et.s.records()) {
    ++r.cases;
    bool exact = oracle::exact_modules(m.nilpotent(c.A()), m.nilpotent(c.B()), m.nilpotent(c.C()), m.matrix(c.x),
                                       m.matrix(c.y));
    if (!exact || m.class_of(c) != c.delta.c) {
      r.fail(exact ? "record carries the wrong class" : "record is not a short exact sequence",
             {{"record", et.conf_json(c)}});
      return r;
    }
  }
  return r;
}

Workspace gen_nakayama(int n, Elem p, int table_bound) {
  guard(n, p);
  auto m = std::make_shared<nakayama::Model>(n, p);
  Workspace W;
  W.name = "nakayama-" + tag(n, p);
  W.et = std::make_unique<ETCat>(m->category());
  ETCat& et = *W.et;
  et.name = W.name;
  m->fill_ext(et.E);
  W.has_ext = true;
  W.table_bound = et.table_bound = table_bound;
  W.model = ModelRef{"nakayama", n};
  for (const Obj& C : et.objects(table_bound))
    for (const Obj& A : et.objects(table_bound)) {
      if (C.empty() || A.empty() || C.size() + A.size() > table_bound) continue;
      et.for_each_ext(C, A, [&](const ExtElem& d) {
        if (!vzero(d.c)) et.s.insert(et.C, m->realize(d));
        return true;
      });
    }
  et.subcats["P"] = Subcat::of(n, {n - 1});
  nakayama::attach(et, m);
  Report acc = nakayama_oracle_check(*m, et, table_bound);
  if (!acc.pass) throw DataError("generated tables rejected by the SES oracle: " + acc.detail);
  return W;
}

// ---- stable Nakayama ----

StableNakayama::StableNakayama(int n, Elem p) : n_(n) {
  guard(n, p);
  if (n < 2) throw DomainError("the stable category of F_p[x]/(x) is zero");
  m_ = std::make_shared<nakayama::Model>(n, p);
  mod_ = std::make_unique<ETCat>(m_->category());
  m_->fill_ext(mod_->E);
  nakayama::attach(*mod_, m_);
  const Category& C = mod_->C;
  Q_ = std::make_unique<Quotient>(C, Subcat::of(n, {n - 1}));
  std::vector<std::string> names;
  for (int i = 0; i + 1 < n; ++i) names.push_back(C.names[i]);
  stable_ = Category(p, names);
  int k = n - 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) stable_.set_hom(i, j, Q_->qdim(i, j));
  stable_.alloc_tables();
  auto lift = [&](int i, int j, int u) { return Q_->lift(Obj::of(i), Obj::of(j), unit(Q_->qdim(i, j), u)); };
  for (int i = 0; i < k; ++i) {
    stable_.idc(i) = Q_->reduce(C.id(Obj::of(i)));
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        Vec& tab = stable_.comp_table(i, j, l);
        int hil = stable_.hom(i, l);
        for (int u = 0; u < stable_.hom(i, j); ++u)
          for (int v = 0; v < stable_.hom(j, l); ++v) {
            Vec w = Q_->reduce(C.o(lift(j, l, v), lift(i, j, u)));
            for (int c = 0; c < hil; ++c) tab[(static_cast<size_t>(u) * stable_.hom(j, l) + v) * hil + c] = w[c];
          }
      }
  }
  stable_.validate();
  // X[1] is the cokernel of the injective hull M_i -> M_n, which is M_{n-i}
  tri_.shift.resize(k);
  for (int i = 0; i < k; ++i) tri_.shift[i] = Obj::of(n - 2 - i);
  Obj P = Obj::of(n - 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int u = 0; u < stable_.hom(i, j); ++u) {
        Mor f = lift(i, j, u);
        // g: M_n -> M_n with g hull_i = hull_j f, then f[1] cohull_i = cohull_j g
        Vec g = *C.pre(hull(i), P).solve(C.o(hull(j), f).c);
        Mor G{P, P, g};
        Obj Si = tri_.shift[i], Sj = tri_.shift[j];
        auto f1 = C.pre(cohull(i), Sj).solve(C.o(cohull(j), G).c);
        if (!f1) throw DataError("stable shift: no induced map on cokernels");
        tri_.basis[{i, j, u}] = Q_->reduce(Mor{Si, Sj, *f1});
      }
}

// basis 0 of Hom(M_{i+1}, M_n) is e_0 -> e_{n-i-1}, of Hom(M_n, M_{n-i-1}) is e_0 -> e_0
Mor StableNakayama::hull(int i) const { return mod_->C.basis(i, n_ - 1, 0); }
Mor StableNakayama::cohull(int i) const { return mod_->C.basis(n_ - 1, n_ - 2 - i, 0); }

DeclaredTriangle StableNakayama::triangle(const Obj& Cobj, const Obj& A, const Mor& z) const {
  const Category& C = mod_->C;
  const ExtStructure& E = mod_->E;
  Obj P = Obj::of(n_ - 1);
  // epsilon_A: A -> P^A -> A[1] in the module category
  std::vector<Obj> ap, pp, sp;
  std::vector<Mor> js, ps;
  for (int a : A.s) {
    ap.push_back(Obj::of(a));
    pp.push_back(P);
    sp.push_back(tri_.shift[a]);
    js.push_back(hull(a));
    ps.push_back(cohull(a));
  }
  Sum SA = C.sum(ap), SP = C.sum(pp), SS = C.sum(sp);
  Conflation eps{C.diag(SA, SP, js), C.diag(SP, SS, ps), {}};
  eps.delta = ExtElem{SS.obj, A, m_->class_of(eps)};
  Mor d = Q_->lift(Cobj, SS.obj, z.c);
  Conflation s = mod_->realize(E.right(eps.delta, d));
  // drop projective summands of the middle term
  std::vector<int> keep;
  int np = 0;
  for (int b : s.B().s) {
    if (b == n_ - 1)
      ++np;
    else
      keep.push_back(b);
  }
  Obj Bs(keep);
  Sum SB = C.sum({Bs, Obj(std::vector<int>(np, n_ - 1))});
  Mor x = C.o(SB.proj[0], s.x), y = C.o(s.y, SB.inj[0]);
  return DeclaredTriangle{Mor{A, Bs, Q_->reduce(x)}, Mor{Bs, Cobj, Q_->reduce(y)}, z};
}

Workspace gen_stable_nakayama(int n, Elem p, int table_bound) {
  auto S = std::make_shared<StableNakayama>(n, p);
  Workspace W;
  W.name = "stable-nakayama-" + tag(n, p);
  W.et = std::make_unique<ETCat>(S->category());
  W.et->name = W.name;
  W.et->E.alloc();
  W.table_bound = table_bound;
  W.model = ModelRef{"stable-nakayama", n};
  Triangulated T = S->shift();
  const Category& C = W.et->C;
  for (const Obj& Cc : W.et->objects(table_bound))
    for (const Obj& A : W.et->objects(table_bound)) {
      if (Cc.empty() || A.empty() || Cc.size() + A.size() > table_bound) continue;
      Obj A1 = T.shifted(C, A).obj;
      for_each_vector(C.hom(Cc, A1), C.p, "stable triangles", [&](const Vec& z) {
        if (!vzero(z)) T.triangles.push_back(S->triangle(Cc, A, Mor{Cc, A1, z}));
        return true;
      });
    }
  W.tri = std::move(T);
  W.tri_model = [S](const Obj& Cc, const Obj& A, const Mor& z) { return S->triangle(Cc, A, z); };
  validate_workspace(W);
  return W;
}

// ---- model lines ----

void attach_model(Workspace& W) {
  const ModelRef& ref = *W.model;
  ETCat& et = *W.et;
  Elem p = et.C.p;
  if (ref.kind == "nakayama") {
    if (!W.has_ext) throw DataError("a nakayama model needs an [ext] section");
    guard(ref.n, p);
    auto m = std::make_shared<nakayama::Model>(ref.n, p);
    ETCat ref_et(m->category());
    m->fill_ext(ref_et.E);
    if (!same_category(ref_et.C, et.C)) throw DataError("category tables differ from the model");
    for (int i = 0; i < et.n(); ++i)
      for (int j = 0; j < et.n(); ++j) {
        if (ref_et.E.dim(i, j) != et.E.dim(i, j)) throw DataError("ext dimensions differ from the model");
        for (int k = 0; k < et.C.hom(i, j); ++k)
          for (int X = 0; X < et.n(); ++X)
            if (!(ref_et.E.ract(i, j, k, X) == et.E.ract(i, j, k, X)) ||
                !(ref_et.E.lact(i, j, k, X) == et.E.lact(i, j, k, X)))
              throw DataError("ext actions differ from the model");
      }
    for (const Conflation& c : et.s.records())
      if (!equivalent(et.C, c, m->realize(c.delta)))
        throw DataError("record is not equivalent to the model realization: " + et.conf_json(c).dump());
    nakayama::attach(et, m);
    return;
  }
  if (!W.tri) throw DataError("a stable-nakayama model needs [shift] and [triangles]");
  auto S = std::make_shared<StableNakayama>(ref.n, p);
  if (!same_category(S->category(), et.C)) throw DataError("category tables differ from the model");
  if (S->shift().shift != W.tri->shift || S->shift().basis != W.tri->basis)
    throw DataError("shift differs from the model");
  for (const DeclaredTriangle& t : W.tri->triangles) {
    DeclaredTriangle u = S->triangle(t.y.cod, t.x.dom, t.z);
    if (!equivalent(et.C, Conflation{t.x, t.y, {}}, Conflation{u.x, u.y, {}}))
      throw DataError("declared triangle is not isomorphic to the model one: " + mor_json(et.C, t.z).dump());
  }
  W.tri_model = [S](const Obj& Cc, const Obj& A, const Mor& z) { return S->triangle(Cc, A, z); };
}

// ---- shifted triple ----

ShiftedTriple gen_shifted_triple(const Workspace& W) {
  if (!W.tri) throw DataError("no [triangles] section: not a triangulated input");
  ShiftedTriple T;
  T.tri = *W.tri;
  T.et = std::make_unique<ETCat>(W.et->C);
  ETCat& et = *T.et;
  const Category& C = et.C;
  int n = C.n();
  et.name = W.name + "-shifted";
  et.subcats = W.et->subcats;
  et.table_bound = W.table_bound;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) et.E.set_dim(c, a, C.hom(Obj::of(c), T.tri.shift[a]));
  et.E.alloc();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < C.hom(j, i); ++k)
        for (int A = 0; A < n; ++A) et.E.ract(j, i, k, A) = C.pre(C.basis(j, i, k), T.tri.shift[A]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < C.hom(a, b); ++k)
        for (int Cc = 0; Cc < n; ++Cc)
          et.E.lact(a, b, k, Cc) = C.post(Mor{T.tri.shift[a], T.tri.shift[b], T.tri.basis.at({a, b, k})}, Obj::of(Cc));
  for (const DeclaredTriangle& t : T.tri.triangles) {
    const Obj &A = t.x.dom, &Cc = t.y.cod;
    et.s.insert(C, Conflation{t.x, t.y, ExtElem{Cc, A, T.tri.to_ext(C, Cc, A, t.z)}});
  }
  if (W.tri_model) {
    auto model = W.tri_model;
    Triangulated tri = T.tri;
    const Category* Cp = &et.C;
    et.s.set_model(
        [model, tri, Cp](const ExtElem& d) {
          DeclaredTriangle t = model(d.C, d.A, tri.to_mor(*Cp, d));
          return Conflation{t.x, t.y, d};
        },
        "declared triangles");
  }
  T.S = Subcat(n);
  T.V = Subcat(n);
  T.Z = Subcat::all(n);
  return T;
}

std::unique_ptr<ShiftAgreement> shift_agreement(const Mutation& M, const MutationFunctors& F, const ShiftedTriple& T) {
  auto out = std::make_unique<ShiftAgreement>();
  Report& r = out->report;
  r.check = "Sigma against the declared shift";
  const Category& C = M.cat();
  const Quotient& Q = M.Q();
  const Triangulated& tri = T.tri;
  out->shift = tabulate("[1]", Q, Q, M.Z, [&](const Obj& X) { return tri.on(X); },
                        [&](const Mor& f) { return tri.on(C, f); });
  NatTransData mu{"mu", &F.Sigma, &out->shift, std::vector<Mor>(C.n())};
  for (int i : M.Z.members()) {
    ++r.cases;
    Obj X = Obj::of(i);
    const Conflation& l = M.left(X);
    Mor lam = tri.to_mor(C, l.delta);  // X<1> -> X[1]
    const Conflation& st = M.sigma_tri(l.C());
    auto inv = is_iso_mod_ideal(st.x, Q);
    if (!inv.iso) {
      r.fail("h^{X<1>} is not invertible", {{"X", C.names[i]}});
      return out;
    }
    Mor m = C.o(lam, *inv.inverse);
    if (!(m.dom == F.Sigma.obj[i]) || !(m.cod == out->shift.obj[i])) {
      r.fail("Sigma X and X[1] have different shapes", {{"X", C.names[i]}});
      return out;
    }
    mu.comp[i] = m;
  }
  Report nat = check_natural(mu, true);
  r.cases += nat.cases;
  if (!nat.pass) {
    r.fail("mu is not a natural isomorphism Sigma => [1]", {{"detail", nat.to_json()}});
    return out;
  }
  out->mu = std::move(mu);
  return out;
}

Report declared_triangles_agree(const Mutation& M, const TriangleFamily& nabla, const ShiftedTriple& T,
                                const NatTransData& mu) {
  Report r("declared triangles");
  const Category& C = M.cat();
  const ETCat& et = M.et();
  // generated => declared: (id, v, id) onto the declared triangle on mu_X c
  for (const Tri4& t : nabla.gens) {
    ++r.cases;
    Mor z = C.o(mu.at(t.O[0]), t.m[2]);
    ExtElem d{t.O[2], t.O[0], T.tri.to_ext(C, t.O[2], t.O[0], z)};
    Conflation D = et.realize(d);
    LinSys L(C.p);
    int v = L.var(C.hom(D.B(), t.O[1]));
    L.eq({{v, C.pre(D.x, t.O[1])}}, t.m[0].c);
    L.eq({{v, C.post(t.m[1], D.B())}}, D.y.c);
    if (!iso_in(C, L, v, D.B(), t.O[1], "declared comparison")) {
      r.fail("generated triangle is not isomorphic to the declared one", {{"triangle", tri_json(C, t)}});
      return r;
    }
  }
  // declared => generated: membership after moving the last map through mu^{-1}
  for (const DeclaredTriangle& d : T.tri.triangles) {
    ++r.cases;
    const Obj& A = d.x.dom;
    auto inv = is_iso_mod_ideal(mu.at(A), M.Q());
    Tri4 t{{A, d.x.cod, d.y.cod, M.Sigma(A)}, {d.x, d.y, C.o(*inv.inverse, d.z)}};
    if (!member_right(M, t)) {
      r.fail("declared triangle is not in the induced family", {{"triangle", tri_json(C, t)}});
      return r;
    }
  }
  return r;
}

// ---- rigid mutation pairs ----

RigidPairVerdict check_rigid_pair(const ETCat& et, const Subcat& D, const Subcat& X, const Subcat& Y) {
  RigidPairVerdict out;
  Report& r = out.report;
  r.check = "rigid mutation pair";
  const Category& C = et.C;
  auto nm = [&](const Subcat& S) {
    json j = json::array();
    for (int i : S.members()) j.push_back(C.names[i]);
    return j;
  };
  for (int a : D.members())
    for (int b : D.members()) {
      ++r.cases;
      if (et.E.dim(a, b)) r.fail("D is not rigid", {{"C", C.names[a]}, {"A", C.names[b]}});
    }
  ++r.cases;
  if (!D.subset_of(X) || !D.subset_of(Y)) r.fail("D must lie in X and Y", {{"D", nm(D)}, {"X", nm(X)}, {"Y", nm(Y)}});
  for (int x : X.members())
    for (int d : D.members()) {
      ++r.cases;
      if (et.E.dim(d, x)) r.fail("X is not in D[-1]^perp", {{"X", C.names[x]}, {"D", C.names[d]}});
    }
  RelExt up(et, RelExt::Sup, D);
  out.Xshift = cone_set(up, X, D) | D;
  ++r.cases;
  if (!(out.Xshift == Y)) r.fail("Y is not X<1>", {{"Y", nm(Y)}, {"X<1>", nm(out.Xshift)}});
  out.Z = X & Y;
  return out;
}

}  // namespace extricat::workbench
