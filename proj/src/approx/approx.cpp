#include "extricat/approx/approx.hpp"

#include <algorithm>
#include <random>

#include "extricat/exactcat/errors.hpp"
#include "extricat/extri/relative.hpp"
#include "extricat/extri/validate.hpp"

namespace extricat {

bool is_D_epic(const Category& C, const Mor& a, const Subcat& D) {
  for (int d : D.members()) {
    Obj Dd = Obj::of(d);
    if (C.post(a, Dd).rank() != C.hom(Dd, a.cod)) return false;
  }
  return true;
}

bool is_D_monic(const Category& C, const Mor& a, const Subcat& D) {
  for (int d : D.members()) {
    Obj Dd = Obj::of(d);
    if (C.pre(a, Dd).rank() != C.hom(a.dom, Dd)) return false;
  }
  return true;
}

namespace {

Mor approximation(const Category& C, const Obj& X, const Subcat& D, bool right) {
  std::vector<Obj> parts;
  std::vector<Mor> maps;
  for (int d : D.members()) {
    Obj Dd = Obj::of(d);
    int h = right ? C.hom(Dd, X) : C.hom(X, Dd);
    for (int k = 0; k < h; ++k) {
      parts.push_back(Dd);
      maps.push_back(right ? C.make(Dd, X, unit(h, k)) : C.make(X, Dd, unit(h, k)));
    }
  }
  auto build = [&](const std::vector<char>& keep) {
    std::vector<Obj> ps;
    std::vector<Mor> ms;
    for (size_t i = 0; i < parts.size(); ++i)
      if (keep[i]) ps.push_back(parts[i]), ms.push_back(maps[i]);
    Sum S = C.sum(ps);
    return right ? C.row(S, ms) : C.column(S, ms);
  };
  std::vector<char> keep(parts.size(), 1);
  for (size_t i = parts.size(); i-- > 0;) {
    keep[i] = 0;
    Mor m = build(keep);
    if (!(right ? is_D_epic(C, m, D) : is_D_monic(C, m, D))) keep[i] = 1;
  }
  return build(keep);
}

ApproxChoice search(const RelExt& E, const Subcat& I, const Subcat& inside, int scan, std::uint32_t seed, bool left) {
  const ETCat& et = E.et();
  const Category& C = et.C;
  ApproxChoice out;
  out.report = Report(left ? "strongly covariantly finite" : "strongly contravariantly finite");
  out.tri.assign(et.n(), std::nullopt);
  auto ends = et.objects(scan);
  for (int x : inside.members()) {
    Obj X = Obj::of(x);
    ++out.report.cases;
    // candidates (other end, class index); classes are enumerated lazily per end
    std::vector<std::pair<Obj, Vec>> cands;
    for (const Obj& K : ends) {
      if (left) E.for_each(K, X, [&](const ExtElem& d) { cands.push_back({K, d.c}); return true; });
      else E.for_each(X, K, [&](const ExtElem& d) { cands.push_back({K, d.c}); return true; });
    }
    if (seed) std::shuffle(cands.begin(), cands.end(), std::mt19937(seed + 7919u * x));
    for (auto& [K, c] : cands) {
      ExtElem d = left ? ExtElem{K, X, c} : ExtElem{X, K, c};
      Conflation t = et.realize(d);
      if (!I.contains(t.B())) continue;
      if (left ? !is_D_monic(C, t.x, I) : !is_D_epic(C, t.y, I)) continue;
      out.tri[x] = ApproxTriangle{left, X, t};
      break;
    }
    if (!out.tri[x])
      out.report.fail(std::string("no ") + (left ? "inflation into" : "deflation from") + " an I-object approximating " +
                          C.names[x] + " within the scan bound",
                      json{{"object", C.names[x]}, {"scan_bound", scan}});
  }
  return out;
}

}  // namespace

Mor right_approximation(const Category& C, const Obj& X, const Subcat& D) { return approximation(C, X, D, true); }
Mor left_approximation(const Category& C, const Obj& X, const Subcat& D) { return approximation(C, X, D, false); }

ApproxChoice strongly_cov_finite(const RelExt& E, const Subcat& I, const Subcat& inside, int scan, std::uint32_t seed) {
  return search(E, I, inside, scan, seed, true);
}

ApproxChoice strongly_contra_finite(const RelExt& E, const Subcat& I, const Subcat& inside, int scan,
                                    std::uint32_t seed) {
  return search(E, I, inside, scan, seed, false);
}

ApproxTriangle sum_triangle(const ETCat& et, const std::vector<std::optional<ApproxTriangle>>& tri, const Obj& X,
                            bool left) {
  std::vector<const Conflation*> ts;
  for (int i : X.s) {
    if (!tri.at(i)) throw DomainError("no frozen approximation triangle for " + et.C.names[i]);
    ts.push_back(&tri[i]->tri);
  }
  return ApproxTriangle{left, X, sum_conflations(et, ts)};
}

FrobeniusVerdict is_relative_frobenius(const ETCat& et, const Subcat& I, int scan) {
  FrobeniusVerdict v;
  v.report = Report("relative Frobenius");
  RelExt full = RelExt::full(et);
  Subcat all = Subcat::all(et.n());
  v.cov = strongly_cov_finite(full, I, all, scan);
  v.contra = strongly_contra_finite(full, I, all, scan);
  v.report.absorb(v.cov.report);
  v.report.absorb(v.contra.report);
  RelExt up(et, RelExt::Sup, I), down(et, RelExt::Sub, I);
  for (int c = 0; c < et.n(); ++c)
    for (int a = 0; a < et.n(); ++a) {
      ++v.report.cases;
      Obj Co = Obj::of(c), Ao = Obj::of(a);
      auto b1 = up.basis(Co, Ao), b2 = down.basis(Co, Ao);
      int dim = et.E.dim(c, a);
      Span s1(dim, et.p(), b1), s2(dim, et.p(), b2);
      bool same = s1.rank() == s2.rank();
      for (auto& v2 : b2) same = same && s1.contains(v2);
      if (!same)
        v.report.fail("E^I and E_I differ on E(" + et.C.names[c] + "," + et.C.names[a] + ")",
                      json{{"C", et.C.names[c]}, {"A", et.C.names[a]}});
    }
  return v;
}

Report relative_vs_approx(const ETCat& et, int bound) {
  Report r("relative structures against D-epic / D-monic");
  int n = et.n();
  if (n > 12) throw CapExceeded("relative_vs_approx: too many subcategories");
  auto confs = universe_conflations(et, bound);
  long bad = 0;
  json first;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subcat D(n);
    for (int i = 0; i < n; ++i) D.in[i] = (mask >> i) & 1;
    RelExt sub(et, RelExt::Sub, D), sup(et, RelExt::Sup, D);
    for (const Conflation& c : confs) {
      r.cases += 2;
      bool e1 = sub.contains(c.delta) != is_D_epic(et.C, c.y, D);
      bool e2 = sup.contains(c.delta) != is_D_monic(et.C, c.x, D);
      if ((e1 || e2) && bad == 0) {
        json m = json::array();
        for (int i : D.members()) m.push_back(et.C.names[i]);
        first = {{"D", m}, {"conflation", et.conf_json(c)}, {"side", e1 ? "E_D vs y" : "E^D vs x"}};
      }
      bad += e1 + e2;
    }
  }
  if (bad) {
    first["mismatches"] = bad;
    r.fail("membership and approximation disagree", first);
  }
  return r;
}

}  // namespace extricat
