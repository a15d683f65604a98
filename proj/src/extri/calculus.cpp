#include "extricat/extri/calculus.hpp"

#include "extricat/exactcat/errors.hpp"
#include "extricat/exactcat/linsys.hpp"

namespace extricat {

namespace {

enum class Pick { Third, First, Middle };

Subcat scan_terms(const RelExt& E, const Subcat& L, const Subcat& M, int scan, Pick pick, std::vector<Conflation>* wit) {
  const ETCat& et = E.et();
  Subcat out(et.n());
  auto all = et.objects(scan);
  auto note = [&](const Obj& X, const Conflation& c) {
    bool fresh = false;
    for (int i : X.s)
      if (!out.has(i)) out.in[i] = 1, fresh = true;
    if (fresh && wit) wit->push_back(c);
  };
  for (const Obj& C : all)
    for (const Obj& A : all) {
      // Third: A in L, B in M.  First: B in L, C in M.  Middle: A in L, C in M.
      if (pick == Pick::Third && !L.contains(A)) continue;
      if (pick == Pick::First && !M.contains(C)) continue;
      if (pick == Pick::Middle && (!L.contains(A) || !M.contains(C))) continue;
      E.for_each(C, A, [&](const ExtElem& d) {
        Conflation c = et.realize(d);
        switch (pick) {
          case Pick::Third:
            if (M.contains(c.B())) note(C, c);
            break;
          case Pick::First:
            if (L.contains(c.B())) note(A, c);
            break;
          case Pick::Middle:
            note(c.B(), c);
            break;
        }
        return true;
      });
    }
  return out;
}

}  // namespace

Subcat cone_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan, std::vector<Conflation>* wit) {
  return scan_terms(E, X, Y, scan, Pick::Third, wit);
}

Subcat cocone_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan, std::vector<Conflation>* wit) {
  return scan_terms(E, X, Y, scan, Pick::First, wit);
}

Subcat star_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan, std::vector<Conflation>* wit) {
  return scan_terms(E, X, Y, scan, Pick::Middle, wit);
}

std::optional<Conflation> extension_closure_violation(const RelExt& E, const Subcat& D, int scan) {
  const ETCat& et = E.et();
  auto objs = et.objects(scan, &D);
  std::optional<Conflation> bad;
  for (const Obj& C : objs)
    for (const Obj& A : objs) {
      if (bad) return bad;
      E.for_each(C, A, [&](const ExtElem& d) {
        Conflation c = et.realize(d);
        if (!D.contains(c.B())) bad = c;
        return !bad;
      });
    }
  return bad;
}

Conflation sum_conflations(const ETCat& et, const std::vector<const Conflation*>& parts) {
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  if (parts.empty()) return Conflation{C.zero(Obj(), Obj()), C.zero(Obj(), Obj()), E.zero(Obj(), Obj())};
  std::vector<Obj> As, Bs, Cs;
  for (auto* t : parts) {
    As.push_back(t->A());
    Bs.push_back(t->B());
    Cs.push_back(t->C());
  }
  Sum SA = C.sum(As), SB = C.sum(Bs), SC = C.sum(Cs);
  std::vector<Mor> xs, ys;
  ExtElem d = E.zero(SC.obj, SA.obj);
  for (size_t k = 0; k < parts.size(); ++k) {
    xs.push_back(parts[k]->x);
    ys.push_back(parts[k]->y);
    d = E.add(d, E.right(E.left(SA.inj[k], parts[k]->delta), SC.proj[k]));
  }
  return Conflation{C.diag(SA, SB, xs), C.diag(SB, SC, ys), d};
}

Subcat projectives(const RelExt& E) {
  const ETCat& et = E.et();
  Subcat out(et.n());
  for (int x = 0; x < et.n(); ++x) {
    bool proj = true;
    for (int a = 0; a < et.n() && proj; ++a) proj = E.is_zero(Obj::of(x), Obj::of(a));
    out.in[x] = proj;
  }
  return out;
}

Subcat injectives(const RelExt& E) {
  const ETCat& et = E.et();
  Subcat out(et.n());
  for (int x = 0; x < et.n(); ++x) {
    bool inj = true;
    for (int c = 0; c < et.n() && inj; ++c) inj = E.is_zero(Obj::of(c), Obj::of(x));
    out.in[x] = inj;
  }
  return out;
}

std::optional<int> lacks_enough_projectives(const RelExt& E, int scan) {
  const ETCat& et = E.et();
  Subcat P = projectives(E);
  for (int x = 0; x < et.n(); ++x) {
    bool ok = false;
    for (const Obj& K : et.objects(scan)) {
      E.for_each(Obj::of(x), K, [&](const ExtElem& d) {
        ok = P.contains(et.realize(d).B());
        return !ok;
      });
      if (ok) break;
    }
    if (!ok) return x;
  }
  return std::nullopt;
}

std::optional<int> lacks_enough_injectives(const RelExt& E, int scan) {
  const ETCat& et = E.et();
  Subcat I = injectives(E);
  for (int x = 0; x < et.n(); ++x) {
    bool ok = false;
    for (const Obj& K : et.objects(scan)) {
      E.for_each(K, Obj::of(x), [&](const ExtElem& d) {
        ok = I.contains(et.realize(d).B());
        return !ok;
      });
      if (ok) break;
    }
    if (!ok) return x;
  }
  return std::nullopt;
}

InflationFrom inflation_from(const ETCat& et, const Mor& f, const Conflation& c) {
  const Category& C = et.C;
  if (!(f.dom == c.A())) throw DomainError("inflation_from: f must start at the first term of the conflation");
  InflationFrom out;
  out.fdelta = et.realize(et.E.left(f, c.delta));
  const Mor &x2 = out.fdelta.x, &y2 = out.fdelta.y;
  out.mid = C.sum({f.cod, c.B()});
  ExtElem cls = et.E.right(c.delta, y2);
  Conflation target = et.realize(cls);
  Mor infl = C.column(out.mid, {f, c.x});
  LinSys L(et.p());
  int g = L.var(C.hom(c.B(), x2.cod));
  L.eq({{g, C.pre(c.x, x2.cod)}}, C.o(x2, f).c);
  L.eq({{g, C.post(y2, c.B())}}, c.y.c);
  auto sol = L.solve();
  if (!sol) throw DataError("inflation_from: no g with g x = x' f and y' g = y");
  auto hit = search_solution(*sol, et.p(), "inflation_from g", [&](const Vec& v) {
    Mor gm{c.B(), x2.cod, v};
    Conflation cand{infl, C.row(out.mid, {C.neg(x2), gm}), cls};
    return equivalent(C, cand, target);
  });
  if (!hit) throw TableIncomplete("inflation_from: the realization of " + et.ext_json(cls).dump() +
                                  " does not match [f; x] for any admissible g");
  out.g = Mor{c.B(), x2.cod, *hit};
  out.conf = Conflation{infl, C.row(out.mid, {C.neg(x2), out.g}), cls};
  return out;
}

DeflationTo deflation_to(const ETCat& et, const Mor& f, const Conflation& c) {
  const Category& C = et.C;
  if (!(f.cod == c.C())) throw DomainError("deflation_to: f must end at the third term of the conflation");
  DeflationTo out;
  out.deltaf = et.realize(et.E.right(c.delta, f));
  const Mor &x2 = out.deltaf.x, &y2 = out.deltaf.y;
  out.mid = C.sum({f.dom, c.B()});
  ExtElem cls = et.E.neg(et.E.left(x2, c.delta));
  Conflation target = et.realize(cls);
  Mor defl = C.row(out.mid, {f, c.y});
  LinSys L(et.p());
  int g = L.var(C.hom(x2.cod, c.B()));
  L.eq({{g, C.pre(x2, c.B())}}, c.x.c);
  L.eq({{g, C.post(c.y, x2.cod)}}, C.o(f, y2).c);
  auto sol = L.solve();
  if (!sol) throw DataError("deflation_to: no g with g x' = x and y g = f y'");
  auto hit = search_solution(*sol, et.p(), "deflation_to g", [&](const Vec& v) {
    Mor gm{x2.cod, c.B(), v};
    Conflation cand{C.column(out.mid, {y2, C.neg(gm)}), defl, cls};
    return equivalent(C, cand, target);
  });
  if (!hit) throw TableIncomplete("deflation_to: the realization of " + et.ext_json(cls).dump() +
                                  " does not match [f y] for any admissible g");
  out.g = Mor{x2.cod, c.B(), *hit};
  out.conf = Conflation{C.column(out.mid, {y2, C.neg(out.g)}), defl, cls};
  return out;
}

std::optional<ShiftedOctahedron> shifted_octahedron(const ETCat& et, const Conflation& a, const Conflation& b) {
  const Category& C = et.C;
  const ExtStructure& E = et.E;
  if (!(a.C() == b.C())) throw DomainError("shifted_octahedron: the conflations need a common third term");
  // e1 = delta2 y1 realized as X2 -> W1 -> Y1, e2 = delta1 y2 as X1 -v2-> W -w2-> Y2
  Conflation r1 = et.realize(E.right(b.delta, a.y));
  Conflation r2 = et.realize(E.right(a.delta, b.y));
  const Obj& W = r2.B();
  if (!(r1.B() == W)) return std::nullopt;
  // e: W -> W1 invertible with w1 := w1s e, v1 := e^-1 v1s
  LinSys L(et.p());
  int e = L.var(C.hom(W, W));
  L.eq({{e, C.pre(r2.x, a.B()) * C.post(r1.y, W)}}, a.x.c);                  // w1 v2 = x1
  L.eq({{e, C.post(C.o(a.y, r1.y), W)}}, C.o(b.y, r2.y).c);                  // y1 w1 = y2 w2
  auto sol = L.solve();
  if (!sol) return std::nullopt;
  std::optional<ShiftedOctahedron> out;
  search_solution(*sol, et.p(), "shifted octahedron W automorphisms", [&](const Vec& v) {
    Mor em{W, W, v};
    LinSys inv(et.p());
    int u = inv.var(C.hom(W, W));
    inv.eq({{u, C.post(em, W)}}, C.id(W).c);
    auto is = inv.solve();
    if (!is) return false;
    Mor einv{W, W, inv.get(is->x0, u)};
    if (!(C.o(einv, em) == C.id(W))) return false;
    Mor v1 = C.o(einv, r1.x), w1 = C.o(r1.y, em);
    if (!(C.o(r2.y, v1) == b.x)) return false;                                        // w2 v1 = x2
    if (!(E.left(r2.x, a.delta) == E.neg(E.left(v1, b.delta)))) return false;      // v2 d1 = -v1 d2
    out = ShiftedOctahedron{Conflation{v1, w1, r1.delta}, r2};
    return true;
  });
  return out;
}

}  // namespace extricat
