#include "extricat/extri/validate.hpp"

#include "extricat/exactcat/errors.hpp"
#include "extricat/exactcat/linsys.hpp"
#include "extricat/exactcat/parallel.hpp"

namespace extricat {

namespace {

bool exact_at(const Mat& f, const Mat& g) {
  // f: U -> V, g: V -> W
  if (!(g * f).is_zero()) return false;
  return f.rank() == f.rows() - g.rank();
}

// rank of the kernel of M projected to columns [lo, hi)
int projected_rank(const Mat& K, int lo, int hi) {
  Mat P(hi - lo, K.cols(), K.p());
  for (int i = lo; i < hi; ++i)
    for (int j = 0; j < K.cols(); ++j) P.at(i - lo, j) = K.at(i, j);
  return P.rank();
}

}  // namespace

std::vector<Conflation> universe_conflations(const ETCat& et, int bound) {
  std::vector<Conflation> out;
  auto objs = et.objects(bound - 1);
  for (const Obj& C : objs)
    for (const Obj& A : objs) {
      if (C.empty() || A.empty() || C.size() + A.size() > bound) continue;
      et.for_each_ext(C, A, [&](const ExtElem& d) {
        out.push_back(et.realize(d));
        return true;
      });
    }
  return out;
}

Report check_exactness(const ETCat& et, const Conflation& c) {
  Report r("exactness");
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  for (int w = 0; w < et.n(); ++w) {
    Obj W = Obj::of(w);
    ++r.cases;
    Mat m1 = C.post(c.x, W), m2 = C.post(c.y, W), m3 = E.on_pre(c.delta, W), m4 = E.post(c.x, W),
        m5 = E.post(c.y, W);
    const char* bad = nullptr;
    if (!exact_at(m1, m2)) bad = "C(W,A) -> C(W,B) -> C(W,C)";
    else if (!exact_at(m2, m3)) bad = "C(W,B) -> C(W,C) -> E(W,A)";
    else if (!exact_at(m3, m4)) bad = "C(W,C) -> E(W,A) -> E(W,B)";
    else if (!exact_at(m4, m5)) bad = "E(W,A) -> E(W,B) -> E(W,C)";
    if (!bad) {
      Mat n1 = C.pre(c.y, W), n2 = C.pre(c.x, W), n3 = E.on_post(c.delta, W), n4 = E.pre(c.y, W), n5 = E.pre(c.x, W);
      if (!exact_at(n1, n2)) bad = "C(C,W) -> C(B,W) -> C(A,W)";
      else if (!exact_at(n2, n3)) bad = "C(B,W) -> C(A,W) -> E(C,W)";
      else if (!exact_at(n3, n4)) bad = "C(A,W) -> E(C,W) -> E(B,W)";
      else if (!exact_at(n4, n5)) bad = "E(C,W) -> E(B,W) -> E(A,W)";
    }
    if (bad) {
      r.fail(std::string("not exact at ") + bad + " for W = " + C.names[w],
             json{{"conflation", et.conf_json(c)}, {"W", C.names[w]}});
      return r;
    }
  }
  return r;
}

std::optional<Et4Witness> et4_fill(const ETCat& et, const Conflation& d, const Conflation& e, std::string* why) {
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Mor &f = d.x, &f2 = d.y, &g = e.x, &g2 = e.y;
  if (!(g.dom == f.cod)) throw DomainError("ET4: the second conflation must start at the middle of the first");
  Et4Witness w;
  w.eps2 = et.realize(E.left(f2, e.delta));
  const Mor &c0 = w.eps2.x, &d0 = w.eps2.y;
  const Obj &A = f.dom, &E0 = c0.cod, &D = g.cod;
  LinSys L(et.p());
  int v = L.var(E.dim(E0, A));
  L.eq({{v, E.pre(c0, A)}}, d.delta.c);
  L.eq({{v, E.post(f, E0)}}, E.right(e.delta, d0).c);
  auto sol = L.solve();
  if (!sol) {
    if (why) *why = "no delta'' with delta'' d = delta and f delta'' = eps e";
    return std::nullopt;
  }
  Mor gf = C.o(g, f), c0f2 = C.o(c0, f2);
  bool found = false;
  for_each_solution(*sol, et.p(), "ET4 delta'' candidates", [&](const Vec& x) {
    ExtElem dd{E0, A, L.get(x, v)};
    Conflation s = et.realize(dd);
    if (!(s.B() == D)) return true;
    const Mor &z = s.x, &z2 = s.y;
    LinSys P(et.p());
    int u = P.var(C.hom(D, D));
    P.eq({{u, C.pre(gf, D)}}, z.c);
    P.eq({{u, C.pre(g, E0) * C.post(z2, D)}}, c0f2.c);
    P.eq({{u, C.post(C.o(d0, z2), D)}}, g2.c);
    auto ps = P.solve();
    if (!ps) return true;
    auto hit = search_solution(*ps, et.p(), "ET4 fill-in psi", [&](const Vec& y) { return C.is_iso(Mor{D, D, y}); });
    if (!hit) return true;
    w.dd = dd;
    w.sdd = s;
    w.psi = Mor{D, D, *hit};
    w.h2 = C.o(z2, w.psi);
    found = true;
    return false;
  });
  if (!found) {
    if (why) *why = "no delta'' whose realization matches g f up to an isomorphism of middle terms";
    return std::nullopt;
  }
  return w;
}

std::optional<Et4opWitness> et4op_fill(const ETCat& et, const Conflation& d, const Conflation& e, std::string* why) {
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  const Mor &x2 = d.x, &x = d.y, &y2 = e.x, &y = e.y;
  if (!(y.cod == x.dom)) throw DomainError("ET4op: the second conflation must end at the middle of the first");
  Et4opWitness w;
  w.eps2 = et.realize(E.right(e.delta, x2));
  const Mor &d0 = w.eps2.x, &c0 = w.eps2.y;
  const Obj &X = x.cod, &E0 = d0.cod, &Z = y.dom;
  LinSys L(et.p());
  int v = L.var(E.dim(X, E0));
  L.eq({{v, E.post(c0, X)}}, d.delta.c);
  L.eq({{v, E.pre(x, E0)}}, E.left(d0, e.delta).c);
  auto sol = L.solve();
  if (!sol) {
    if (why) *why = "no delta'' with c delta'' = delta and delta'' x = d eps";
    return std::nullopt;
  }
  Mor xy = C.o(x, y), x2c0 = C.o(x2, c0);
  bool found = false;
  for_each_solution(*sol, et.p(), "ET4op delta'' candidates", [&](const Vec& xs) {
    ExtElem dd{X, E0, L.get(xs, v)};
    Conflation s = et.realize(dd);
    if (!(s.B() == Z)) return true;
    const Mor &w2 = s.x, &w1 = s.y;
    LinSys P(et.p());
    int u = P.var(C.hom(Z, Z));
    P.eq({{u, C.post(xy, Z)}}, w1.c);
    P.eq({{u, C.post(y, E0) * C.pre(w2, Z)}}, x2c0.c);
    P.eq({{u, C.pre(C.o(w2, d0), Z)}}, y2.c);
    auto ps = P.solve();
    if (!ps) return true;
    auto hit = search_solution(*ps, et.p(), "ET4op fill-in phi", [&](const Vec& q) { return C.is_iso(Mor{Z, Z, q}); });
    if (!hit) return true;
    w.dd = dd;
    w.sdd = s;
    w.phi = Mor{Z, Z, *hit};
    found = true;
    return false;
  });
  if (!found) {
    if (why) *why = "no delta'' whose realization matches x y up to an isomorphism of middle terms";
    return std::nullopt;
  }
  return w;
}

std::vector<Report> validate_et(const ETCat& et, const EtOptions& opt) {
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  std::vector<Report> out;

  Report cat("category");
  try {
    C.validate();
  } catch (const DataError& ex) {
    cat.fail(ex.what());
  }
  out.push_back(cat);
  out.push_back(E.validate_bifunctor());

  auto confs = universe_conflations(et, opt.bound);

  Report zero("ET2 zero");
  for (const Obj& X : et.objects(opt.bound - 1))
    for (const Obj& Y : et.objects(opt.bound - 1)) {
      if (X.size() + Y.size() > opt.bound) continue;
      ++zero.cases;
      ExtElem z = E.zero(Y, X);
      if (!equivalent(C, et.realize(z), split_conflation(C, z)))
        zero.fail("s(0) is not the split conflation for E(" + C.name(Y) + "," + C.name(X) + ")",
                  json{{"C", C.name(Y)}, {"A", C.name(X)}});
    }
  out.push_back(zero);

  // additivity on pairs with indecomposable ends
  Report add("ET2 additivity");
  {
    std::vector<Conflation> small;
    for (auto& c : confs)
      if (c.A().size() == 1 && c.C().size() == 1) small.push_back(c);
    for (auto& c1 : small)
      for (auto& c2 : small) {
        if (!add.pass) break;
        ++add.cases;
        Sum SA = C.sum({c1.A(), c2.A()}), SB = C.sum({c1.B(), c2.B()}), SC = C.sum({c1.C(), c2.C()});
        ExtElem dsum = E.add(E.right(E.left(SA.inj[0], c1.delta), SC.proj[0]),
                             E.right(E.left(SA.inj[1], c2.delta), SC.proj[1]));
        Conflation direct{C.diag(SA, SB, {c1.x, c2.x}), C.diag(SB, SC, {c1.y, c2.y}), dsum};
        if (!equivalent(C, et.realize(dsum), direct))
          add.fail("s(delta1 + delta2) is not equivalent to s(delta1) + s(delta2)",
                   json{{"delta1", et.ext_json(c1.delta)}, {"delta2", et.ext_json(c2.delta)}});
      }
  }
  out.push_back(add);

  Report exact("exactness");
  {
    std::vector<Report> rs(confs.size());
    parallel_for(confs.size(), [&](std::size_t i) { rs[i] = check_exactness(et, confs[i]); });
    for (auto& r : rs) exact.absorb(r);
  }
  out.push_back(exact);

  // ET2 realization of morphisms, ET3, ET3op: one kernel per ordered pair
  Report real("ET2 realization"), et3("ET3"), et3op("ET3op");
  {
    struct Res {
      int bad = 0;  // 1 realization, 2 ET3, 3 ET3op
    };
    std::size_t m = confs.size();
    std::vector<Res> res(m * m);
    parallel_for(m * m, [&](std::size_t k) {
      const Conflation &s = confs[k / m], &t = confs[k % m];
      int ha = C.hom(s.A(), t.A()), hb = C.hom(s.B(), t.B()), hc = C.hom(s.C(), t.C());
      Mat Pxa = C.post(t.x, s.A()), Pxb = -C.pre(s.x, t.B());
      Mat Pyb = C.post(t.y, s.B()), Pyc = -C.pre(s.y, t.C());
      Mat Pda = E.on_post(s.delta, t.A()), Pdc = -E.on_pre(t.delta, s.C());
      LinSys L(et.p());
      int a = L.var(ha), b = L.var(hb), c = L.var(hc);
      L.eq({{a, Pxa}, {b, Pxb}}, Vec(Pxa.rows(), 0));
      L.eq({{b, Pyb}, {c, Pyc}}, Vec(Pyb.rows(), 0));
      L.eq({{a, Pda}, {c, Pdc}}, Vec(Pda.rows(), 0));
      Mat K = L.matrix().kernel();
      auto hdim = [&](const Mat& M1, const Mat& M2) { return M1.cols() + M2.cols() - M1.hcat(M2).rank(); };
      // coordinates: a in [0, ha), b in [ha, ha+hb), c after
      Mat Kac(ha + hc, K.cols(), et.p());
      for (int j = 0; j < K.cols(); ++j) {
        for (int i = 0; i < ha; ++i) Kac.at(i, j) = K.at(i, j);
        for (int i = 0; i < hc; ++i) Kac.at(ha + i, j) = K.at(ha + hb + i, j);
      }
      if (Kac.rank() != hdim(Pda, Pdc)) res[k].bad = 1;
      else if (projected_rank(K, 0, ha + hb) != hdim(Pxa, Pxb)) res[k].bad = 2;
      else if (projected_rank(K, ha, ha + hb + hc) != hdim(Pyb, Pyc)) res[k].bad = 3;
    });
    for (std::size_t k = 0; k < m * m; ++k) {
      ++real.cases, ++et3.cases, ++et3op.cases;
      if (!res[k].bad) continue;
      json w{{"first", et.conf_json(confs[k / m])}, {"second", et.conf_json(confs[k % m])}};
      if (res[k].bad == 1) real.fail("a morphism of extensions (a, c) has no middle map b", w);
      if (res[k].bad == 2) et3.fail("a commuting square (a, b) on inflations has no fill-in c", w);
      if (res[k].bad == 3) et3op.fail("a commuting square (b, c) on deflations has no fill-in a", w);
    }
  }
  out.push_back(real);
  out.push_back(et3);
  out.push_back(et3op);

  Report et4("ET4"), et4op("ET4op");
  {
    auto sides = et.objects(opt.et4_side);
    struct Job {
      std::size_t conf;
      Obj F;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < confs.size(); ++i)
      for (auto& F : sides)
        if (!F.empty()) jobs.push_back({i, F});
    std::vector<Report> r4(jobs.size(), Report("ET4")), r4op(jobs.size(), Report("ET4op"));
    parallel_for(jobs.size(), [&](std::size_t j) {
      const Conflation& d = confs[jobs[j].conf];
      const Obj& F = jobs[j].F;
      et.for_each_ext(F, d.B(), [&](const ExtElem& eps) {
        ++r4[j].cases;
        Conflation e = et.realize(eps);
        std::string why;
        if (!et4_fill(et, d, e, &why)) {
          r4[j].fail(why, json{{"delta", et.conf_json(d)}, {"eps", et.conf_json(e)}});
          return false;
        }
        return true;
      });
      et.for_each_ext(d.B(), F, [&](const ExtElem& eps) {
        ++r4op[j].cases;
        Conflation e = et.realize(eps);
        std::string why;
        if (!et4op_fill(et, d, e, &why)) {
          r4op[j].fail(why, json{{"delta", et.conf_json(d)}, {"eps", et.conf_json(e)}});
          return false;
        }
        return true;
      });
    });
    for (auto& r : r4) et4.absorb(r);
    for (auto& r : r4op) et4op.absorb(r);
  }
  out.push_back(et4);
  out.push_back(et4op);
  for (auto& r : out)
    if (r.pass && r.detail.empty()) r.detail = std::to_string(r.cases) + " cases";
  return out;
}

}  // namespace extricat
