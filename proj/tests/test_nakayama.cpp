#include "doctest.h"
#include "extricat/workbench/nakayama.hpp"
#include "extricat/workbench/ses_oracle.hpp"
#include "oracle/modules.hpp"

using namespace extricat;

namespace {

struct Built {
  std::shared_ptr<nakayama::Model> m;
  std::unique_ptr<ETCat> et;
};

Built build(int n, Elem p) {
  Built b;
  b.m = std::make_shared<nakayama::Model>(n, p);
  b.et = std::make_unique<ETCat>(b.m->category());
  b.m->fill_ext(b.et->E);
  nakayama::attach(*b.et, b.m);
  return b;
}

}  // namespace

TEST_CASE("nakayama presentation is a category with intertwiner hom dims") {
  for (int n = 1; n <= 3; ++n)
    for (Elem p : {2u, 3u}) {
      auto b = build(n, p);
      CHECK_NOTHROW(b.et->C.validate());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(b.et->C.hom(i, j) ==
                                         [&] {
                                           auto maps = oracle::module_maps({i + 1}, {j + 1}, p);
                                           int d = 0;
                                           for (std::size_t s = maps.size(); s > 1; s /= p) ++d;
                                           return d;
                                         }());
    }
}

TEST_CASE("N2 composition: inclusion then projection is x on M2") {
  auto b = build(2, 2);
  auto& C = b.et->C;
  Mor proj = C.basis(1, 0, 0), incl = C.basis(0, 1, 0);
  CHECK(vzero(C.o(proj, incl).c));
  Mor x = C.o(incl, proj);
  CHECK(!vzero(x.c));
  CHECK(b.m->matrix(x) == oracle::nilpotent({2}, 2));
}

TEST_CASE("ext dimensions agree with the SES enumeration oracle") {
  for (auto [n, p] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}}) {
    auto b = build(n, p);
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a) {
        auto cnt = oracle::ses_classes({c + 1}, {a + 1}, n, p);
        std::uint64_t sz = 1;
        for (int k = 0; k < b.et->E.dim(c, a); ++k) sz *= p;
        CHECK(sz == cnt.classes);
      }
  }
}

TEST_CASE("ext actions are bifunctorial") {
  for (auto [n, p] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}, {3, 3u}}) {
    auto b = build(n, p);
    CHECK(b.et->E.validate_bifunctor().pass);
  }
}

TEST_CASE("model realizations are exact, carry their class and match oracle middle terms") {
  for (auto [n, p] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}}) {
    auto b = build(n, p);
    auto& et = *b.et;
    for (const Obj& C : et.objects(2))
      for (const Obj& A : et.objects(2)) {
        if (C.empty() || A.empty() || C.size() + A.size() > 3 || b.m->dim(C) + b.m->dim(A) > 5) continue;
        std::map<std::vector<int>, std::uint64_t> mids;
        et.for_each_ext(C, A, [&](const ExtElem& d) {
          Conflation cf = et.realize(d);
          CHECK(oracle::exact_modules(b.m->nilpotent(A), b.m->nilpotent(cf.B()), b.m->nilpotent(C), b.m->matrix(cf.x),
                                      b.m->matrix(cf.y)));
          CHECK(b.m->class_of(cf) == d.c);
          std::vector<int> lens;
          for (int i : cf.B().s) lens.push_back(i + 1);
          ++mids[lens];
          return true;
        });
        std::vector<int> cl, al;
        for (int i : C.s) cl.push_back(i + 1);
        for (int i : A.s) al.push_back(i + 1);
        CHECK(mids == oracle::ses_classes(cl, al, n, p).middle);
      }
  }
}

TEST_CASE("syzygy oracle on F_2[x]/(x^3) swaps M1 and M2") {
  CHECK(oracle_t::syzygy(1, 3, 2) == std::vector<int>{2});
  CHECK(oracle_t::syzygy(2, 3, 2) == std::vector<int>{1});
  CHECK(oracle_t::cosyzygy(1, 3, 2) == std::vector<int>{2});
  CHECK(oracle_t::syzygy(3, 3, 2).empty());
}
