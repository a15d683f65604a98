// Acceptance run: one line per criterion. Exit 0 when every criterion passes, or when the
// failing set equals the one named by --expect-fail (a comma list), 1 otherwise.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "extricat/approx/approx.hpp"
#include "extricat/extri/validate.hpp"
#include "extricat/workbench/pipeline.hpp"
#include "oracle/modules.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double s) {
  char b[32];
  std::snprintf(b, sizeof b, "%.1fs", s);
  return b;
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
  void merge(const Verdict& v) {
    pass &= v.pass;
    notes.insert(notes.end(), v.notes.begin(), v.notes.end());
  }
};

Subcat P(int n) { return Subcat::of(n, {n - 1}); }

std::string tag(int n, Elem p) { return "N" + std::to_string(n) + " p=" + std::to_string(p); }

// one corpus with the projective triple and everything built on it
struct Corpus {
  int n;
  Elem p;
  Workspace W;
  double gen_s = 0;
  std::unique_ptr<Mutation> M;
  std::unique_ptr<MutationFunctors> F;
  TriangleFamily nab, del;

  Corpus(int n_, Elem p_) : n(n_), p(p_) {
    auto t = std::chrono::steady_clock::now();
    W = gen_nakayama(n, p);  // refuses unless the SES enumeration reproduces every table
    gen_s = since(t);
    M = std::make_unique<Mutation>(*W.et, P(n), Subcat::all(n), P(n));
    if (M->certified()) {
      F = build_functors(*M);
      nab = generate_family(*M, true);
      del = generate_family(*M, false);
    }
  }
  std::string name() const { return tag(n, p); }
};

Verdict c1(Corpus& c) {
  Verdict v;
  auto t = std::chrono::steady_clock::now();
  nakayama::Model m(c.n, c.p);
  Report oracle = nakayama_oracle_check(m, *c.W.et, kTableBound);
  v.need(oracle.pass, c.name() + " SES oracle: " + oracle.detail);
  int failed = 0;
  for (const Report& r : validate_et(*c.W.et)) {
    if (!r.pass) ++failed;
    v.need(r.pass, c.name() + " " + r.check + ": " + r.detail);
  }
  auto univ = universe_conflations(*c.W.et, 3);
  std::size_t exact = 0;
  for (const Conflation& k : univ) exact += check_exactness(*c.W.et, k).pass;
  v.need(exact == univ.size(), c.name() + " exactness");
  double s = since(t) + c.gen_s;
  v.need(s < 60, c.name() + " over 60s");
  v.note(c.name() + ": ET axioms " + (failed ? "fail" : "pass") + ", " + std::to_string(exact) + "/" +
         std::to_string(univ.size()) + " exact, oracle " + std::to_string(oracle.cases) + " cases, " + fmt(s));
  return v;
}

Verdict c2(Corpus& c) {
  Verdict v;
  const Mutation& M = *c.M;
  v.need(M.mt1.pass, c.name() + " MT1: " + M.mt1.detail);
  v.need(M.mt2.pass, c.name() + " MT2: " + M.mt2.detail);
  v.need(M.mt3.pass, c.name() + " MT3: " + M.mt3.detail);
  if (!M.certified()) return v;
  PlusMinus pm = plus_minus(M);
  Mt4Verdict mv = check_MT4(M, pm);
  v.need(mv.mt4_plus.pass, c.name() + " MT4+: " + mv.mt4_plus.detail);
  v.note(c.name() + ": MT1-MT3, MT4+ " + (v.pass ? "pass" : "fail"));
  return v;
}

std::vector<int> lengths(const Quotient& Q, const Obj& X) {
  std::vector<int> l;
  for (int i : Q.strip(X).s) l.push_back(i + 1);
  return l;
}

std::string lens(const std::vector<int>& l) {
  if (l.empty()) return "0";
  std::string s;
  for (int x : l) s += (s.empty() ? "M" : "+M") + std::to_string(x);
  return s;
}

Verdict c3(Corpus& c, bool want_swap) {
  Verdict v;
  if (!c.M->certified()) {
    v.need(false, c.name() + " triple not certified");
    return v;
  }
  const Mutation& M = *c.M;
  std::string tab;
  for (int i = 0; i + 1 < c.n; ++i) {
    auto sg = lengths(M.Q(), M.Sigma(Obj::of(i))), om = lengths(M.Q(), M.Omega(Obj::of(i)));
    auto osg = oracle_t::cosyzygy(i + 1, c.n, c.p), oom = oracle_t::syzygy(i + 1, c.n, c.p);
    v.need(sg == osg, c.name() + " Sigma M" + std::to_string(i + 1) + " = " + lens(sg) + ", oracle " + lens(osg));
    v.need(om == oom, c.name() + " Omega M" + std::to_string(i + 1) + " = " + lens(om) + ", oracle " + lens(oom));
    tab += " M" + std::to_string(i + 1) + "->" + lens(sg);
  }
  if (want_swap) {
    v.need(M.Q().strip(M.Sigma(Obj::of(0))) == Obj::of(1) && M.Q().strip(M.Sigma(Obj::of(1))) == Obj::of(0) &&
               M.Q().strip(M.Omega(Obj::of(0))) == Obj::of(1) && M.Q().strip(M.Omega(Obj::of(1))) == Obj::of(0),
           c.name() + " swap M1 <-> M2");
  }
  for (bool dual : {false, true}) {
    auto q = quasi_inverse(M, *c.F, dual);
    v.need(q->report.pass, c.name() + " " + q->report.check + ": " + q->report.detail);
  }
  v.note(c.name() + ": Sigma" + tab + " matches the syzygy oracle, both quasi-inverse witnesses verify");
  return v;
}

Verdict c4(Corpus& c) {
  Verdict v;
  Report r = relative_vs_approx(*c.W.et);
  std::string mism = r.witness.contains("mismatches") ? r.witness["mismatches"].dump() : "0";
  v.need(r.pass, c.name() + " " + r.detail);
  v.note(c.name() + ": " + std::to_string(r.cases) + " (conflation, D) pairs, " + (r.pass ? "0" : mism) +
         " mismatches");
  return v;
}

Verdict c5(Corpus& c) {
  Verdict v;
  const Mutation& M = *c.M;
  long cases = 0;
  for (const Report& r : {M.unit_bijectivity(), M.phi_report(), M.triangle_identities(), M.adjunction_diagram()}) {
    v.need(r.pass, c.name() + " " + r.check + ": " + r.detail);
    cases += r.cases;
  }
  v.note(c.name() + ": " + std::to_string(cases) + " cases, " + (v.pass ? "0" : "some") + " violations");
  return v;
}

// positive axioms and the corrupted family; the sign sabotage is run separately
Verdict c6(Corpus& c) {
  Verdict v;
  const Mutation& M = *c.M;
  auto all = [&](const AxiomReport& a) {
    for (const Report& r : a.axioms) v.need(r.pass, c.name() + " " + r.check + ": " + r.detail);
  };
  all(verify_RT(M, c.nab));
  all(verify_LT(M, c.del));
  Report pre = verify_pretriangulated(M, c.nab, c.del);
  v.need(pre.pass, c.name() + " pretriangulated: " + pre.detail);
  AxiomReport tri = verify_triangulated(M, *c.F, c.nab, c.del);
  all(tri);
  TriangleFamily bad = c.nab;
  int k = corrupt_family(bad, M);
  v.need(k >= 0, c.name() + " no generator to corrupt");
  AxiomReport rt = verify_RT(M, bad);
  bool caught = (rt.find("RT2") && !rt.find("RT2")->pass) || (rt.find("RT3") && !rt.find("RT3")->pass);
  v.need(caught, c.name() + " corrupted family passes RT2 and RT3");
  v.note(c.name() + ": RT, LT, pretriangulated, triangulated " + (v.pass ? "pass" : "fail") +
         ", corrupted generator " + std::to_string(k) + (caught ? " caught by RT2/RT3" : " missed"));
  return v;
}

// pretriangulated must fail once the sign in Phi is dropped
Verdict sabotage(const Corpus& c) {
  Verdict v;
  MutationOptions o;
  o.flip_phi_sign = true;
  Mutation M(*c.W.et, P(c.n), Subcat::all(c.n), P(c.n), o);
  auto nab = generate_family(M, true), del = generate_family(M, false);
  Report pre = verify_pretriangulated(M, nab, del);
  if (c.p == 2) {
    // -1 = 1: the sabotaged run is the honest one
    v.note(c.name() + ": sign flip is the identity, not a test");
    return v;
  }
  v.need(!pre.pass, c.name() + " sign-sabotaged Phi still pretriangulated (" + std::to_string(pre.cases) +
                        " gluing cases)");
  if (!pre.pass) v.note(c.name() + ": sign-sabotaged Phi fails pretriangulated (" + pre.detail + ")");
  return v;
}

Verdict c7(const Corpus& c, int reseeds) {
  Verdict v;
  struct Run {
    std::unique_ptr<Mutation> M;
    std::unique_ptr<MutationFunctors> F;
    TriangleFamily n, d;
  };
  std::vector<Run> runs;
  for (int s = 0; s <= reseeds; ++s) {
    MutationOptions o;
    o.seed = static_cast<std::uint32_t>(s);
    Run r;
    r.M = std::make_unique<Mutation>(*c.W.et, P(c.n), Subcat::all(c.n), P(c.n), o);
    r.F = build_functors(*r.M);
    r.n = generate_family(*r.M, true);
    r.d = generate_family(*r.M, false);
    runs.push_back(std::move(r));
  }
  int pairs = 0;
  for (std::size_t a = 0; a < runs.size(); ++a)
    for (std::size_t b = a + 1; b < runs.size(); ++b) {
      Report r = compare_choices(*runs[a].M, *runs[a].F, runs[a].n, runs[a].d, *runs[b].M, *runs[b].F, runs[b].n,
                                 runs[b].d);
      v.need(r.pass, c.name() + " seeds " + std::to_string(a) + "/" + std::to_string(b) + ": " + r.detail);
      ++pairs;
    }
  v.note(c.name() + ": seeds 0.." + std::to_string(reseeds) + ", " + std::to_string(pairs) + " pairs " +
         (v.pass ? "isomorphic with mu found" : "not all isomorphic"));
  return v;
}

Verdict c8(const std::string& data_dir) {
  Verdict v;
  std::ifstream f(data_dir + "/stable_n3.cat", std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  v.need(ss.str() == emit(gen_stable_nakayama(3, 2)), "shipped stable_n3.cat differs from the generator");
  Loaded L = load_text(ss.str());
  v.need(L.shifted.has_value(), "stable N3 did not load as a shifted triple");
  if (!L.shifted) return v;
  const ShiftedTriple& T = *L.shifted;
  Mutation M(*T.et, T.S, T.Z, T.V);
  v.need(M.certified(), "(0, C, 0) not certified");
  if (!M.certified()) return v;
  auto F = build_functors(M);
  auto sa = shift_agreement(M, *F, T);
  v.need(sa->report.pass, "shift: " + sa->report.detail);
  v.need(sa->mu.has_value(), "no natural iso Sigma => [1]");
  if (!sa->mu) return v;
  auto nab = generate_family(M, true);
  Report d = declared_triangles_agree(M, nab, T, *sa->mu);
  v.need(d.pass, "declared triangles: " + d.detail);
  v.note("stable N3 p=2: Sigma agrees with the declared shift (" + std::to_string(sa->report.cases) +
         " cases), nabla iso-equal to " + std::to_string(T.tri.triangles.size()) + " declared triangles");
  return v;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = EXTRICAT_DATA_DIR;
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string k;
      while (std::getline(ss, k, ',')) expect_fail.insert(std::stoi(k));
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<int, Verdict>> out;
  auto emit_line = [&](int k, const Verdict& v) {
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << "  " << join(v.notes) << std::endl;
    out.emplace_back(k, v);
  };

  Corpus n2(2, 2), n3(3, 2);
  {
    Verdict v = c1(n2);
    v.merge(c1(n3));
    emit_line(1, v);
  }
  {
    Verdict v = c2(n2);
    v.merge(c2(n3));
    emit_line(2, v);
  }
  emit_line(3, c3(n3, true));
  {
    Verdict v = c4(n2);
    v.merge(c4(n3));
    emit_line(4, v);
  }
  {
    Verdict v = c5(n2);
    v.merge(c5(n3));
    emit_line(5, v);
  }
  {
    // the sign test needs a field where -1 != 1; N3 at p = 3 is the smallest corpus where it bites
    Corpus n3p3(3, 3);
    Verdict v = c6(n2);
    v.merge(c6(n3));
    v.merge(sabotage(n2));
    v.merge(sabotage(n3));
    v.merge(sabotage(n3p3));
    emit_line(6, v);
  }
  {
    Verdict v = c7(n2, 5);
    v.merge(c7(n3, 5));
    emit_line(7, v);
  }
  emit_line(8, c8(data_dir));
  {
    Corpus n2p3(2, 3);
    Verdict v = c1(n2p3);
    v.merge(c2(n2p3));
    v.merge(c3(n2p3, false));
    v.merge(c6(n2p3));
    v.merge(sabotage(n2p3));
    emit_line(9, v);
  }
  std::set<int> failed;
  for (auto& [k, v] : out)
    if (!v.pass) failed.insert(k);
  std::cout << "total " << fmt(since(t0)) << ", " << (9 - failed.size()) << "/9 pass" << std::endl;
  if (failed == expect_fail) return 0;
  std::cout << "failing set differs from the expected one" << std::endl;
  return 1;
}
