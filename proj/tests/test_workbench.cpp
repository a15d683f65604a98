#include "doctest.h"
#include "extricat/exactcat/errors.hpp"
#include "extricat/extri/validate.hpp"
#include "extricat/workbench/pipeline.hpp"

using namespace extricat;
using namespace extricat::workbench;

TEST_CASE("shifted triple of stable N3 recovers the declared shift and triangles") {
  for (Elem p : {2u, 3u}) {
    CAPTURE(p);
    Loaded L = load_text(emit(gen_stable_nakayama(3, p)));
    REQUIRE(L.shifted);
    const ShiftedTriple& T = *L.shifted;
    for (const Report& r : validate_et(*T.et)) {
      CAPTURE(r.check);
      CHECK(r.pass);
    }
    Mutation M(*T.et, T.S, T.Z, T.V);
    REQUIRE(M.certified());
    auto F = build_functors(M);
    auto sa = shift_agreement(M, *F, T);
    CHECK(sa->report.pass);
    REQUIRE(sa->mu);
    auto nab = generate_family(M, true);
    CHECK(declared_triangles_agree(M, nab, T, *sa->mu).pass);
  }
}

TEST_CASE("rigid mutation pairs on stable N3") {
  Loaded L = load_text(emit(gen_stable_nakayama(3, 2)));
  const ETCat& et = L.et();
  int n = et.n();
  auto all = check_rigid_pair(et, Subcat(n), Subcat::all(n), Subcat::all(n));
  CHECK(all.report.pass);
  CHECK(all.Z == Subcat::all(n));
  // M1 shifts to M2, so (M1, M1) is not a pair
  auto bad = check_rigid_pair(et, Subcat(n), Subcat::of(n, {0}), Subcat::of(n, {0}));
  CHECK_FALSE(bad.report.pass);
  CHECK(bad.Xshift == Subcat::of(n, {1}));
  auto good = check_rigid_pair(et, Subcat(n), Subcat::of(n, {0}), Subcat::of(n, {1}));
  CHECK(good.report.pass);
}

TEST_CASE("reports are deterministic without timing") {
  std::string text = emit(gen_nakayama(2, 2));
  Loaded a = load_text(text), b = load_text(text);
  RunOptions o;
  o.seed = 3;
  std::string ja = run_validate(a, o).to_json().dump(), jb = run_validate(b, o).to_json().dump();
  CHECK(ja == jb);
  json j = json::parse(ja);
  CHECK(j["schema"] == "extricat-report/1");
  CHECK(j["input"]["digest"] == digest(text));
  CHECK_FALSE(j.contains("timing"));
  Triple t = parse_triple(a.et(), "P,ALL,P");
  CHECK(run_axioms(a, t, o).to_json().dump() == run_axioms(b, t, o).to_json().dump());
}

TEST_CASE("triple specs") {
  Loaded L = load_text(emit(gen_nakayama(3, 2)));
  const ETCat& et = L.et();
  Triple t = parse_triple(et, "P,ALL,M1+M3");
  CHECK(t.S == Subcat::of(3, {2}));
  CHECK(t.Z == Subcat::all(3));
  CHECK(t.V == Subcat::of(3, {0, 2}));
  CHECK(parse_triple(et, "NONE,ALL,0").S.empty());
  CHECK_THROWS_AS(parse_triple(et, "P,ALL"), DomainError);
  CHECK_THROWS_AS(parse_triple(et, "P,ALL,M9"), DomainError);
}

TEST_CASE("pipeline verdicts on the projective triple") {
  Loaded L = load_text(emit(gen_nakayama(2, 2)));
  Triple t = parse_triple(L.et(), "P,ALL,P");
  RunOptions o;
  o.reseed = 2;
  auto R = run_axioms(L, t, o);
  CHECK(R.pass());
  CHECK(R.extra["triangulated"]["verdict"] == "pass");
  CHECK(R.extra["triangulated"]["via"] == "MT4+");
  auto bad = run_mutation_check(L, parse_triple(L.et(), "M1,ALL,M2"), o);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("markdown rendering lists every verdict") {
  Loaded L = load_text(emit(gen_nakayama(2, 2)));
  auto R = run_validate(L, {});
  std::string md = render_markdown(R.to_json());
  for (auto& [stage, r] : R.verdicts) CHECK(md.find(r.check) != std::string::npos);
}
