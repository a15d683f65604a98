#include <set>

#include "extricat/exactcat/errors.hpp"
#include "extricat/extri/validate.hpp"
#include "extricat/mutation/mutation.hpp"

namespace extricat {

namespace {

json names(const Category& C, const Subcat& D) {
  json j = json::array();
  for (int i : D.members()) j.push_back(C.names[i]);
  return j;
}

void add_summands(Subcat& D, const Obj& X) {
  for (int i : X.s) D.in[i] = 1;
}

// smallest index isomorphic to i in C/[I]
int rep(const Quotient& Q, int i) {
  for (int j = 0; j < i; ++j) {
    if (Q.ideal().has(j)) continue;
    Mor f;
    bool found = false;
    // an iso between indecomposables shows up on some basis combination; search the quotient Hom
    int d = Q.qdim(Obj::of(i), Obj::of(j));
    if (d == 0 || Q.qdim(Obj::of(j), Obj::of(i)) == 0) continue;
    for_each_vector(d, Q.p(), "isomorphisms " + std::to_string(i) + "->" + std::to_string(j), [&](const Vec& q) {
      if (vzero(q)) return true;
      f = Q.lift(Obj::of(i), Obj::of(j), q);
      if (is_iso_mod_ideal(f, Q).iso) found = true;
      return !found;
    });
    if (found) return j;
  }
  return i;
}

}  // namespace

Subcat iso_classes(const Quotient& Q, const Subcat& D) {
  Subcat out(D.n());
  for (int i : D.members())
    if (!Q.ideal().has(i)) out.in[rep(Q, i)] = 1;
  return out;
}

PlusMinus plus_minus(const Mutation& M) {
  const ETCat& et = M.et();
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Quotient& Q = M.Q();
  PlusMinus pm;
  pm.Um = cocone_set(M.upper(), M.I, M.S, M.options().scan);
  pm.Tp = cone_set(M.lower(), M.V, M.I, M.options().scan);
  pm.Z1m = Subcat(et.n());
  pm.Zm1p = Subcat(et.n());
  pm.report = Report("(.)^- and (.)^+");
  Report& r = pm.report;
  Subcat Z1(et.n()), Zm1(et.n());
  for (int x : M.Z.members()) {
    Obj X = Obj::of(x);
    Obj U = M.up(X);
    const Conflation& st = M.sigma_tri(U);
    Conflation mc = et.realize(E.right(M.right(st.B()).delta, st.x));
    pm.minus.emplace(x, mc);
    add_summands(pm.Z1m, mc.B());
    add_summands(Z1, U);
    Obj T = M.down(X);
    const Conflation& ot = M.omega_tri(T);
    Conflation pc = et.realize(E.left(ot.y, M.left(ot.B()).delta));
    pm.plus.emplace(x, pc);
    add_summands(pm.Zm1p, pc.B());
    add_summands(Zm1, T);
  }
  for (int u : pm.Um.members())
    for (int z : Zm1.members()) {
      ++r.cases;
      if (!M.upper().is_zero(Obj::of(u), Obj::of(z)))
        r.fail("E^I(Ũ^-, Z<-1>) is nonzero", {{"C", C.names[u]}, {"A", C.names[z]}});
    }
  for (int z : Z1.members())
    for (int t : pm.Tp.members()) {
      ++r.cases;
      if (!M.lower().is_zero(Obj::of(z), Obj::of(t)))
        r.fail("E_I(Z<1>, T̃^+) is nonzero", {{"C", C.names[z]}, {"A", C.names[t]}});
    }
  for (int m : pm.Z1m.members()) {
    ++r.cases;
    if (!pm.Um.has(m) && !M.I.has(m)) r.fail("Z<1>^- is not inside Ũ^-", {{"object", C.names[m]}});
  }
  for (int m : pm.Zm1p.members()) {
    ++r.cases;
    if (!pm.Tp.has(m) && !M.I.has(m)) r.fail("Z<-1>^+ is not inside T̃^+", {{"object", C.names[m]}});
  }
  // s_U o - : C/[I](W, U^-) -> C/[I](W, U) for W in Ũ^-
  for (auto& [x, mc] : pm.minus)
    for (int w : pm.Um.members()) {
      ++r.cases;
      Obj W = Obj::of(w);
      Mat A = Q.proj(W, mc.C()) * C.post(mc.y, W) *
              matrix_of(Q.qdim(W, mc.B()), C.hom(W, mc.B()), C.p, [&](const Vec& q) { return Q.lift(W, mc.B(), q).c; });
      int rk = A.rank();
      if (rk != A.rows() || rk != A.cols())
        r.fail("s_U o - is not bijective", {{"X", C.names[x]}, {"W", C.names[w]}, {"rank", rk}});
    }
  for (auto& [x, pc] : pm.plus)
    for (int w : pm.Tp.members()) {
      ++r.cases;
      Obj W = Obj::of(w);
      Mat A = Q.proj(pc.A(), W) * C.pre(pc.x, W) *
              matrix_of(Q.qdim(pc.B(), W), C.hom(pc.B(), W), C.p, [&](const Vec& q) { return Q.lift(pc.B(), W, q).c; });
      int rk = A.rank();
      if (rk != A.rows() || rk != A.cols())
        r.fail("- o s^T is not bijective", {{"X", C.names[x]}, {"W", C.names[w]}, {"rank", rk}});
    }
  return pm;
}

Mt4Verdict check_MT4(const Mutation& M, const PlusMinus& pm) {
  const Category& C = M.cat();
  const Quotient& Q = M.Q();
  Subcat a = iso_classes(Q, pm.Z1m), b = iso_classes(Q, pm.Zm1p);
  Subcat um = iso_classes(Q, pm.Um), tp = iso_classes(Q, pm.Tp);
  Mt4Verdict v;
  v.mt4 = Report("MT4");
  v.mt4_prime = Report("MT4'");
  v.mt4_plus = Report("MT4+");
  auto sets = [&]() {
    return json{{"Z<1>^-", names(C, a)}, {"Z<-1>^+", names(C, b)}, {"Ũ^-", names(C, um)}, {"T̃^+", names(C, tp)}};
  };
  ++v.mt4.cases;
  if (!(a == b)) v.mt4.fail("Z<1>^- differs from Z<-1>^+", sets());
  v.mt4_prime.cases += 2;
  for (int m : a.members())
    if (!tp.has(m)) v.mt4_prime.fail("(i) Z<1>^- is not inside T̃^+", {{"object", C.names[m]}, {"sets", sets()}});
  for (int m : b.members())
    if (!um.has(m)) v.mt4_prime.fail("(ii) Z<-1>^+ is not inside Ũ^-", {{"object", C.names[m]}, {"sets", sets()}});
  ++v.mt4_plus.cases;
  if (!(um == tp)) v.mt4_plus.fail("Ũ^- differs from T̃^+", sets());
  v.implications = Report("MT4 implications");
  v.implications.cases = 2;
  if (v.mt4_plus.pass && !v.mt4.pass) v.implications.fail("MT4+ holds but MT4 does not", sets());
  if (v.mt4.pass != v.mt4_prime.pass) v.implications.fail("MT4 and MT4' disagree", sets());
  return v;
}

namespace {

struct PsiData {
  Obj obj;
  ExtElem eps;  // eps_Z in E(Psi Z, Z<-1>), or eps'_Z in E(Z<1>, Psi' Z)
  Mor psi, phi;
  json witness;
};

PsiData psi_at(const Mutation& M, int z) {
  const ETCat& et = M.et();
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Quotient& Q = M.Q();
  Obj Zo = Obj::of(z);
  Obj T = M.down(Zo);
  const Conflation& ot = M.omega_tri(T);
  const Conflation& lo = M.left(ot.B());
  // Z<-1> -> Z<-1>^+ -> (Omega Z)<1>
  Conflation chi = et.realize(E.left(ot.y, lo.delta));
  std::optional<Conflation> e;
  for (const Obj& S : et.objects(M.options().scan, &M.S)) {
    M.upper().for_each(S, chi.B(), [&](const ExtElem& d) {
      Conflation c = et.realize(d);
      if (M.I.contains(c.B())) e = c;
      return !e;
    });
    if (e) break;
  }
  if (!e) throw DataError("Psi: no E^I-conflation Z<-1>^+ -> I' -> S for " + C.names[z]);
  std::string why;
  auto w = et4_fill(et, chi, *e, &why);
  if (!w) throw DataError("Psi: ET4 fill failed for " + C.names[z] + ": " + why);
  PsiData out;
  out.obj = w->eps2.B();
  out.eps = w->dd;
  auto psi = E.on_pre(out.eps, Zo).solve(M.right(Zo).delta.c);
  if (!psi) throw DataError("Psi: lambda_Z does not factor through eps_Z for " + C.names[z]);
  out.psi = Mor{Zo, out.obj, *psi};
  const Conflation& st = M.sigma_tri(lo.C());
  auto phi = (Q.proj(st.A(), out.obj) * C.pre(st.x, out.obj)).solve(Q.reduce(w->eps2.x));
  if (!phi) throw DataError("Psi: no phi with phi h^U = hbar for " + C.names[z]);
  out.phi = Mor{st.B(), out.obj, *phi};
  out.witness = {{"chi", et.conf_json(chi)}, {"resolution", et.conf_json(*e)}, {"eps2", et.conf_json(w->eps2)},
                 {"eps", et.conf_json(w->sdd)}};
  return out;
}

PsiData psi_dual_at(const Mutation& M, int z) {
  const ETCat& et = M.et();
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Quotient& Q = M.Q();
  Obj Zo = Obj::of(z);
  Obj U = M.up(Zo);
  const Conflation& st = M.sigma_tri(U);
  const Conflation& ro = M.right(st.B());
  // (Sigma Z)<-1> -> (Z<1>)^- -> Z<1>
  Conflation chi = et.realize(E.right(ro.delta, st.x));
  std::optional<Conflation> e;
  for (const Obj& V : et.objects(M.options().scan, &M.V)) {
    M.lower().for_each(chi.B(), V, [&](const ExtElem& d) {
      Conflation c = et.realize(d);
      if (M.I.contains(c.B())) e = c;
      return !e;
    });
    if (e) break;
  }
  if (!e) throw DataError("Psi': no E_I-conflation V -> I' -> Z<1>^- for " + C.names[z]);
  std::string why;
  auto w = et4op_fill(et, chi, *e, &why);
  if (!w) throw DataError("Psi': ET4op fill failed for " + C.names[z] + ": " + why);
  PsiData out;
  out.obj = w->eps2.B();
  out.eps = w->dd;
  auto psi = E.on_post(out.eps, Zo).solve(M.left(Zo).delta.c);
  if (!psi) throw DataError("Psi': lambda^Z does not factor through eps'_Z for " + C.names[z]);
  out.psi = Mor{out.obj, Zo, *psi};
  const Conflation& ot = M.omega_tri(ro.A());
  auto phi = (Q.proj(out.obj, ot.C()) * C.post(ot.y, out.obj)).solve(Q.reduce(w->eps2.y));
  if (!phi) throw DataError("Psi': no phi with h_T phi = hbar for " + C.names[z]);
  out.phi = Mor{out.obj, ot.B(), *phi};
  out.witness = {{"chi", et.conf_json(chi)}, {"resolution", et.conf_json(*e)}, {"eps2", et.conf_json(w->eps2)},
                 {"eps", et.conf_json(w->sdd)}};
  return out;
}

}  // namespace

std::unique_ptr<QuasiInverse> quasi_inverse(const Mutation& M, const MutationFunctors& F, bool dual) {
  const ETCat& et = M.et();
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Quotient& Q = M.Q();
  auto out = std::make_unique<QuasiInverse>();
  QuasiInverse& qi = *out;
  qi.dual = dual;
  qi.report = Report(dual ? "Omega Sigma ≅ Id" : "Sigma Omega ≅ Id");
  qi.id = F.id;
  qi.composite = dual ? F.OmegaSigma : F.SigmaOmega;
  qi.composite.src = qi.composite.dst = &Q;
  std::map<int, PsiData> d;
  try {
    for (int z : M.Z.members()) d.emplace(z, dual ? psi_dual_at(M, z) : psi_at(M, z));
  } catch (const DataError& e) {
    qi.report.fail(e.what());
    return out;
  }
  for (auto& [z, pd] : d) qi.witness[z] = pd.witness;
  auto fo = [&](const Obj& X) { return d.at(X[0]).obj; };
  auto fm = [&](const Mor& f) {
    const PsiData &a = d.at(f.dom[0]), &b = d.at(f.cod[0]);
    std::optional<Vec> v;
    if (!dual)
      // eps_{Z2} Psi(z) = z<-1> eps_{Z1}
      v = E.on_pre(b.eps, a.obj).solve(E.left(M.down(f), a.eps).c);
    else
      // Psi'(z) eps'_{Z1} = eps'_{Z2} z<1>
      v = E.on_post(a.eps, b.obj).solve(E.right(b.eps, M.up(f)).c);
    if (!v) throw DataError("Psi has no value on " + mor_json(C, f).dump());
    return Mor{a.obj, b.obj, *v};
  };
  try {
    qi.Psi = tabulate(dual ? "Psi'" : "Psi", Q, Q, M.Z, fo, fm);
  } catch (const DataError& e) {
    qi.report.fail(e.what());
    return out;
  }
  std::vector<Mor> psi(et.n()), phi(et.n());
  for (auto& [z, pd] : d) {
    psi[z] = pd.psi;
    phi[z] = pd.phi;
  }
  if (!dual) {
    qi.psi = NatTransData{"psi", &qi.id, &qi.Psi, psi};
    qi.phi = NatTransData{"phi", &qi.composite, &qi.Psi, phi};
  } else {
    qi.psi = NatTransData{"psi'", &qi.Psi, &qi.id, psi};
    qi.phi = NatTransData{"phi'", &qi.Psi, &qi.composite, phi};
  }
  qi.report.absorb(check_functor(qi.Psi));
  qi.report.absorb(check_natural(qi.psi, true));
  qi.report.absorb(check_natural(qi.phi, true));
  return out;
}

ConcentricVerdict check_concentric_tcp(const ETCat& et, const Subcat& S, const Subcat& T, const Subcat& U,
                                       const Subcat& V, int scan) {
  const Category& C = et.C;
  ConcentricVerdict v;
  v.report = Report("concentric twin cotorsion pair");
  Report& r = v.report;
  RelExt full = RelExt::full(et);
  Subcat all = Subcat::all(et.n());
  auto cp = [&](const Subcat& A, const Subcat& B, const std::string& nm) {
    for (int a : A.members())
      for (int b : B.members()) {
        ++r.cases;
        if (!full.is_zero(Obj::of(a), Obj::of(b)))
          r.fail(nm + ": E is nonzero between the two halves", {{"C", C.names[a]}, {"A", C.names[b]}});
      }
    ++r.cases;
    Subcat cone = cone_set(full, B, A, scan);
    if (!(cone == all)) r.fail(nm + ": Cone(V, U) misses objects", {{"cone", names(C, cone)}});
    ++r.cases;
    Subcat cocone = cocone_set(full, B, A, scan);
    if (!(cocone == all)) r.fail(nm + ": CoCone(V, U) misses objects", {{"cocone", names(C, cocone)}});
  };
  cp(S, T, "(S, T)");
  cp(U, V, "(U, V)");
  ++r.cases;
  if (!S.subset_of(U)) r.fail("twin condition: S is not inside U", {{"S", names(C, S)}, {"U", names(C, U)}});
  ++r.cases;
  if (!((S & T) == (U & V)))
    r.fail("not concentric: S ∩ T differs from U ∩ V", {{"S∩T", names(C, S & T)}, {"U∩V", names(C, U & V)}});
  v.S = S;
  v.Z = T & U;
  v.V = V;
  if (!r.pass) return v;
  // conic conflations against I-monic / I-epic maps
  Subcat I = S & T;
  for (const Conflation& c : universe_conflations(et, 3)) {
    if (v.Z.contains(c.A()) && v.Z.contains(c.B())) {
      ++r.cases;
      if (U.contains(c.C()) != is_D_monic(C, c.x, I))
        r.fail("U-conic does not match I-monic inflation", {{"conflation", et.conf_json(c)}});
    }
    if (v.Z.contains(c.B()) && v.Z.contains(c.C())) {
      ++r.cases;
      if (T.contains(c.A()) != is_D_epic(C, c.y, I))
        r.fail("T-coconic does not match I-epic deflation", {{"conflation", et.conf_json(c)}});
    }
  }
  return v;
}

}  // namespace extricat
