#include "doctest.h"
#include "extricat/triangles/triangles.hpp"
#include "extricat/workbench/generators.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

Subcat P(int n) { return Subcat::of(n, {n - 1}); }

void all_pass(const AxiomReport& a) {
  for (const Report& r : a.axioms) {
    CAPTURE(r.check);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

}  // namespace

TEST_CASE("right and left families on N2 satisfy their axioms") {
  Workspace W = gen_nakayama(2, 2);
  Mutation M(*W.et, P(2), Subcat::all(2), P(2));
  auto F = build_functors(M);
  auto nab = generate_family(M, true), del = generate_family(M, false);
  CHECK(nab.built.pass);
  CHECK(del.built.pass);
  CHECK_FALSE(nab.gens.empty());
  all_pass(verify_RT(M, nab));
  all_pass(verify_LT(M, del));
  CHECK(verify_pretriangulated(M, nab, del).pass);
  all_pass(verify_triangulated(M, *F, nab, del));
  CHECK(exactness_probe(M, nab).pass);
  CHECK(exactness_probe(M, del).pass);
  for (const Tri4& t : nab.gens) CHECK(member_right(M, t));
  for (const Tri4& t : del.gens) CHECK(member_left(M, t));
}

TEST_CASE("a corrupted generator fails RT2 or RT3") {
  for (Elem p : {2u, 3u}) {
    CAPTURE(p);
    Workspace W = gen_nakayama(2, p);
    Mutation M(*W.et, P(2), Subcat::all(2), P(2));
    auto nab = generate_family(M, true);
    int k = corrupt_family(nab, M);
    REQUIRE(k >= 0);
    CHECK(nab.corrupted == k);
    AxiomReport a = verify_RT(M, nab);
    const Report* rt2 = a.find("RT2");
    const Report* rt3 = a.find("RT3");
    REQUIRE(rt2);
    REQUIRE(rt3);
    CHECK_FALSE((rt2->pass && rt3->pass));
  }
}

TEST_CASE("a different search seed gives isomorphic functors and families") {
  Workspace W = gen_nakayama(3, 2);
  Mutation A(*W.et, P(3), Subcat::all(3), P(3));
  auto FA = build_functors(A);
  auto nA = generate_family(A, true), dA = generate_family(A, false);
  MutationOptions o;
  o.seed = 7;
  Mutation B(*W.et, P(3), Subcat::all(3), P(3), o);
  auto FB = build_functors(B);
  auto nB = generate_family(B, true), dB = generate_family(B, false);
  Report r = compare_choices(A, *FA, nA, dA, B, *FB, nB, dB);
  CAPTURE(r.detail);
  CHECK(r.pass);
}

TEST_CASE("an empty ideal on N2 is not certified") {
  // (0, C, 0): nothing from I approximates M1, so <-1> does not exist
  Workspace W = gen_nakayama(2, 2);
  Mutation M(*W.et, Subcat(2), Subcat::all(2), Subcat(2));
  CHECK_FALSE(M.mt1.pass);
  CHECK_FALSE(M.certified());
}
