#include "extricat/workbench/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extricat/approx/approx.hpp"
#include "extricat/exactcat/errors.hpp"
#include "extricat/extri/validate.hpp"

namespace extricat::workbench {

namespace {

struct Clock {
  bool on;
  json* out;
  std::chrono::steady_clock::time_point t = std::chrono::steady_clock::now();
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    if (on) (*out)[stage] = std::chrono::duration<double>(now - t).count();
    t = now;
  }
};

VerificationReport start(const std::string& cmd, const Loaded& in, const RunOptions& opt) {
  VerificationReport R;
  R.command = cmd;
  R.input_name = in.ws.name;
  R.input_digest = digest(in.bytes);
  R.seed = opt.seed;
  return R;
}

json subcat_json(const Category& C, const Subcat& D) {
  json j = json::array();
  for (int i : D.members()) j.push_back(C.names[i]);
  return j;
}

json functor_json(const Category& C, const FunctorData& F) {
  json obj = json::object(), mor = json::array();
  for (int i : F.domain.members()) obj[C.names[i]] = C.name(F.obj[i]);
  for (int i : F.domain.members())
    for (int j : F.domain.members())
      for (int k = 0; k < C.hom(i, j); ++k)
        mor.push_back({{"dom", C.names[i]}, {"cod", C.names[j]}, {"basis", k}, {"image", mor_json(C, F.on(C.basis(i, j, k)))}});
  return {{"objects", obj}, {"morphisms", mor}};
}

// shared front part: certify the triple, stop early when MT1-MT3 fail
struct Stage {
  std::unique_ptr<Mutation> M;
  std::unique_ptr<MutationFunctors> F;
};

Stage certify(const Loaded& in, const Triple& t, const RunOptions& opt, VerificationReport& R) {
  Stage s;
  MutationOptions mo;
  mo.seed = opt.seed;
  s.M = std::make_unique<Mutation>(in.et(), t.S, t.Z, t.V, mo);
  R.add("mutation", s.M->mt1);
  R.add("mutation", s.M->mt2);
  R.add("mutation", s.M->mt3);
  const Category& C = in.et().C;
  R.extra["triple"] = {{"spec", t.spec}, {"S", subcat_json(C, t.S)}, {"Z", subcat_json(C, t.Z)},
                       {"V", subcat_json(C, t.V)}, {"I", subcat_json(C, s.M->I)}};
  if (s.M->certified()) s.F = build_functors(*s.M);
  return s;
}

void reseed_runs(const Loaded& in, const Triple& t, const RunOptions& opt, const Stage& base, const TriangleFamily& nab,
                 const TriangleFamily& del, VerificationReport& R) {
  for (int k = 1; k <= opt.reseed; ++k) {
    MutationOptions mo;
    mo.seed = opt.seed + static_cast<std::uint32_t>(k);
    Mutation B(in.et(), t.S, t.Z, t.V, mo);
    auto FB = build_functors(B);
    auto nb = generate_family(B, true), db = generate_family(B, false);
    Report r = compare_choices(*base.M, *base.F, nab, del, B, *FB, nb, db);
    r.check += " (seed " + std::to_string(mo.seed) + ")";
    R.add("reseed", r);
  }
}

}  // namespace

Loaded load_text(std::string text) {
  Loaded L;
  L.bytes = std::move(text);
  L.ws = parse_text(L.bytes);
  if (!L.ws.has_ext) {
    if (!L.ws.tri) throw DataError("the file has neither [ext] nor [triangles]");
    L.shifted = gen_shifted_triple(L.ws);
  }
  return L;
}

Loaded load_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open " + path);
    ss << f.rdbuf();
  }
  return load_text(ss.str());
}

Triple parse_triple(const ETCat& et, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string p;
  while (std::getline(ss, p, ',')) parts.push_back(p);
  if (parts.size() != 3) throw DomainError("--triple wants three comma-separated parts, got '" + spec + "'");
  int n = et.n();
  auto one = [&](const std::string& s) {
    if (s == "ALL") return Subcat::all(n);
    if (s == "NONE" || s == "0" || s.empty()) return Subcat(n);
    if (auto it = et.subcats.find(s); it != et.subcats.end()) return it->second;
    Subcat D(n);
    std::stringstream ps(s);
    std::string nm;
    while (std::getline(ps, nm, '+')) {
      int i = et.C.index(nm);
      if (i < 0) throw DomainError("unknown subcategory or indecomposable '" + nm + "' in --triple");
      D.in[i] = 1;
    }
    return D;
  };
  return Triple{one(parts[0]), one(parts[1]), one(parts[2]), spec};
}

VerificationReport run_validate(const Loaded& in, const RunOptions& opt) {
  VerificationReport R = start("validate", in, opt);
  Clock clk{opt.timing, &R.timing};
  const ETCat& et = in.et();
  const Category& C = et.C;
  json hom = json::array(), ext = json::array();
  for (int i = 0; i < et.n(); ++i)
    for (int j = 0; j < et.n(); ++j) {
      if (C.hom(i, j)) hom.push_back({C.names[i], C.names[j], C.hom(i, j)});
      if (et.E.dim(i, j)) ext.push_back({C.names[i], C.names[j], et.E.dim(i, j)});
    }
  R.extra = {{"p", C.p}, {"indecomposables", C.names}, {"hom", hom}, {"ext", ext},
             {"records", et.s.size()}, {"triangulated_input", in.shifted.has_value()}};
  if (in.ws.model && in.ws.model->kind == "nakayama") {
    nakayama::Model m(in.ws.model->n, C.p);
    R.add("oracle", nakayama_oracle_check(m, et, in.ws.table_bound ? in.ws.table_bound : kTableBound));
    clk.lap("oracle");
  }
  for (const Report& r : validate_et(et)) R.add("ET", r);
  clk.lap("ET");
  R.add("relative", relative_vs_approx(et));
  clk.lap("relative");
  return R;
}

VerificationReport run_mutation_check(const Loaded& in, const Triple& t, const RunOptions& opt) {
  VerificationReport R = start("mutation-check", in, opt);
  Clock clk{opt.timing, &R.timing};
  Stage s = certify(in, t, opt, R);
  clk.lap("certify");
  if (!s.M->certified()) return R;
  const Mutation& M = *s.M;
  PlusMinus pm = plus_minus(M);
  R.add("mt4", pm.report);
  Mt4Verdict v = check_MT4(M, pm);
  R.add("mt4", v.mt4);
  R.add("mt4", v.mt4_prime);
  R.add("mt4", v.mt4_plus);
  R.add("mt4", v.implications);
  clk.lap("mt4");
  R.add("functors", check_functors(*s.F));
  R.add("functors", M.approx_in_both());
  R.add("functors", M.unit_bijectivity());
  R.add("functors", M.phi_report());
  R.add("functors", M.triangle_identities());
  R.add("functors", M.adjunction_diagram());
  R.add("functors", M.sigma_iso_probe());
  clk.lap("functors");
  const Category& C = M.cat();
  R.extra["Sigma"] = functor_json(C, s.F->Sigma);
  R.extra["Omega"] = functor_json(C, s.F->Omega);
  if (opt.reseed > 0) {
    auto nab = generate_family(M, true), del = generate_family(M, false);
    reseed_runs(in, t, opt, s, nab, del, R);
    clk.lap("reseed");
  }
  return R;
}

VerificationReport run_induce(const Loaded& in, const Triple& t, const RunOptions& opt) {
  VerificationReport R = start("induce", in, opt);
  Clock clk{opt.timing, &R.timing};
  Stage s = certify(in, t, opt, R);
  if (!s.M->certified()) return R;
  const Mutation& M = *s.M;
  const Category& C = M.cat();
  auto nab = generate_family(M, true), del = generate_family(M, false);
  R.add("families", nab.built);
  R.add("families", del.built);
  clk.lap("families");
  json jn = json::array(), jd = json::array();
  for (auto& g : nab.gens) jn.push_back(tri_json(C, g));
  for (auto& g : del.gens) jd.push_back(tri_json(C, g));
  R.extra["Sigma"] = functor_json(C, s.F->Sigma);
  R.extra["Omega"] = functor_json(C, s.F->Omega);
  R.extra["nabla"] = jn;
  R.extra["delta"] = jd;
  return R;
}

VerificationReport run_axioms(const Loaded& in, const Triple& t, const RunOptions& opt) {
  VerificationReport R = start("axioms", in, opt);
  Clock clk{opt.timing, &R.timing};
  Stage s = certify(in, t, opt, R);
  clk.lap("certify");
  if (!s.M->certified()) return R;
  const Mutation& M = *s.M;
  PlusMinus pm = plus_minus(M);
  Mt4Verdict v = check_MT4(M, pm);
  R.add("mt4", v.mt4);
  R.add("mt4", v.mt4_prime);
  R.add("mt4", v.mt4_plus);
  clk.lap("mt4");
  auto nab = generate_family(M, true), del = generate_family(M, false);
  R.add("families", nab.built);
  R.add("families", del.built);
  clk.lap("families");
  for (const Report& r : verify_RT(M, nab).axioms) R.add("right triangles", r);
  for (const Report& r : verify_LT(M, del).axioms) R.add("left triangles", r);
  clk.lap("RT/LT");
  R.add("pretriangulated", verify_pretriangulated(M, nab, del));
  clk.lap("pretriangulated");
  AxiomReport tri = verify_triangulated(M, *s.F, nab, del);
  for (const Report& r : tri.axioms) R.add("triangulated", r);
  clk.lap("triangulated");
  R.add("exactness", exactness_probe(M, nab));
  R.add("exactness", exactness_probe(M, del));
  const Report* fin = tri.find("triangulated");
  std::string via = v.mt4_plus.pass ? "MT4+" : v.mt4.pass ? "MT4" : "none";
  R.extra["triangulated"] = {{"verdict", fin && fin->pass ? "pass" : "fail"}, {"via", via}};
  if (in.shifted) {
    auto sa = shift_agreement(M, *s.F, *in.shifted);
    R.add("declared", sa->report);
    if (sa->mu) R.add("declared", declared_triangles_agree(M, nab, *in.shifted, *sa->mu));
    clk.lap("declared");
  }
  if (opt.reseed > 0) {
    reseed_runs(in, t, opt, s, nab, del, R);
    clk.lap("reseed");
  }
  return R;
}

}  // namespace extricat::workbench
