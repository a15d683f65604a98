#include "doctest.h"
#include "extricat/triangles/triangles.hpp"
#include "extricat/workbench/generators.hpp"
#include "oracle/modules.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

std::vector<int> lengths(const Quotient& Q, const Obj& X) {
  std::vector<int> v;
  for (int i : Q.strip(X).s) v.push_back(i + 1);
  return v;
}

Subcat P(int n) { return Subcat::of(n, {n - 1}); }

}  // namespace

TEST_CASE("Sigma and Omega on N3 are cosyzygy and syzygy") {
  for (Elem p : {2u, 3u}) {
    Workspace W = gen_nakayama(3, p);
    Mutation M(*W.et, P(3), Subcat::all(3), P(3));
    REQUIRE(M.certified());
    for (int i = 0; i < 2; ++i) {
      CHECK(lengths(M.Q(), M.Sigma(Obj::of(i))) == oracle_t::cosyzygy(i + 1, 3, p));
      CHECK(lengths(M.Q(), M.Omega(Obj::of(i))) == oracle_t::syzygy(i + 1, 3, p));
    }
    // the swap itself
    CHECK(M.Q().strip(M.Sigma(Obj::of(0))) == Obj::of(1));
    CHECK(M.Q().strip(M.Sigma(Obj::of(1))) == Obj::of(0));
  }
}

TEST_CASE("adjunction checks on N2 and N3") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    Workspace W = gen_nakayama(n, 2);
    Mutation M(*W.et, P(n), Subcat::all(n), P(n));
    REQUIRE(M.certified());
    for (const Report& r : {M.unit_bijectivity(), M.phi_report(), M.triangle_identities(), M.adjunction_diagram(),
                            M.approx_in_both(), M.sigma_iso_probe()}) {
      CAPTURE(r.check);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
    auto F = build_functors(M);
    CHECK(check_functors(*F).pass);
    for (bool dual : {false, true}) CHECK(quasi_inverse(M, *F, dual)->report.pass);
  }
}

TEST_CASE("MT4 verdicts for the projective triple") {
  Workspace W = gen_nakayama(3, 2);
  Mutation M(*W.et, P(3), Subcat::all(3), P(3));
  PlusMinus pm = plus_minus(M);
  CHECK(pm.report.pass);
  Mt4Verdict v = check_MT4(M, pm);
  CHECK(v.mt4.pass);
  CHECK(v.mt4_prime.pass);
  CHECK(v.mt4_plus.pass);
  CHECK(v.implications.pass);
}

TEST_CASE("a triple violating MT1 is refused") {
  Workspace W = gen_nakayama(3, 2);
  Mutation M(*W.et, Subcat::of(3, {0}), Subcat::all(3), Subcat::of(3, {1}));
  CHECK_FALSE(M.mt1.pass);
  CHECK_FALSE(M.certified());
  CHECK_FALSE(M.mt1.detail.empty());
}

TEST_CASE("a sign-sabotaged Phi breaks the pretriangulated gluing on N3 at p = 3") {
  Workspace W = gen_nakayama(3, 3);
  MutationOptions o;
  o.flip_phi_sign = true;
  Mutation M(*W.et, P(3), Subcat::all(3), P(3), o);
  REQUIRE(M.certified());
  auto nab = generate_family(M, true), del = generate_family(M, false);
  CHECK_FALSE(verify_pretriangulated(M, nab, del).pass);
}

TEST_CASE("concentric twin cotorsion pair front end") {
  Workspace W = gen_nakayama(2, 2);
  auto cv = check_concentric_tcp(*W.et, P(2), Subcat::all(2), Subcat::all(2), P(2));
  CHECK(cv.report.pass);
  CHECK(cv.Z == Subcat::all(2));
}
