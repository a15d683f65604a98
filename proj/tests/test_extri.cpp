#include "doctest.h"
#include "extricat/approx/approx.hpp"
#include "extricat/extri/validate.hpp"
#include "extricat/workbench/generators.hpp"
#include "extricat/workbench/ses_oracle.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

bool all_pass(const std::vector<Report>& rs) {
  bool ok = true;
  for (const Report& r : rs) {
    CAPTURE(r.check);
    CAPTURE(r.detail);
    CHECK(r.pass);
    ok &= r.pass;
  }
  return ok;
}

}  // namespace

TEST_CASE("N2 is extriangulated at p = 2 and p = 3") {
  for (Elem p : {2u, 3u}) {
    Workspace W = gen_nakayama(2, p);
    CHECK(all_pass(validate_et(*W.et)));
  }
}

TEST_CASE("stored records agree with the module oracle") {
  Workspace W = gen_nakayama(2, 3);
  nakayama::Model m(2, 3);
  Report r = nakayama_oracle_check(m, *W.et, kTableBound);
  CHECK(r.pass);
  CHECK(r.cases > 0);
}

TEST_CASE("relative structures match approximation conditions") {
  Workspace W = gen_nakayama(2, 2);
  Report r = relative_vs_approx(*W.et);
  CHECK(r.pass);
  CHECK(r.cases > 0);
}

TEST_CASE("a record that is not exact is caught") {
  Workspace W = gen_nakayama(2, 2);
  auto recs = W.et->s.records();
  REQUIRE_FALSE(recs.empty());
  Conflation bad = recs.front();
  bad.y = W.et->C.zero(bad.B(), bad.C());
  W.et->s.replace(bad);
  bool any_fail = false;
  for (const Report& r : validate_et(*W.et)) any_fail |= !r.pass;
  CHECK(any_fail);
  nakayama::Model m(2, 2);
  CHECK_FALSE(nakayama_oracle_check(m, *W.et, kTableBound).pass);
}

TEST_CASE("the split class realizes as a split conflation") {
  Workspace W = gen_nakayama(2, 2);
  ExtElem z = W.et->E.zero(Obj::of(0), Obj::of(1));
  Conflation c = W.et->realize(z);
  CHECK(c.B() == Obj::of(0) + Obj::of(1));
  CHECK(check_exactness(*W.et, c).pass);
}

TEST_CASE("ext dims over N3 against brute-force SES counts") {
  Workspace W = gen_nakayama(3, 2);
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a) {
      auto cnt = oracle::ses_classes({c + 1}, {a + 1}, 3, 2);
      CHECK(cnt.classes == (std::uint64_t{1} << W.et->E.dim(c, a)));
    }
}
