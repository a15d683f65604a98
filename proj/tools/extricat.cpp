// extricat: command-line front end. Exit 0 all verdicts pass, 1 a verdict failed, 2 bad input.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "extricat/exactcat/errors.hpp"
#include "extricat/workbench/pipeline.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

struct Global {
  std::uint32_t seed = 0;
  int reseed = 0;
  std::uint64_t cap = 0;
  Elem p = 0;
  bool timing = false;
  bool md = false;
  std::string out;
};

void write(const Global& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw DataError("cannot write " + g.out);
  f << text;
}

int finish(const Global& g, const VerificationReport& R) {
  json j = R.to_json();
  write(g, g.md ? render_markdown(j) : j.dump(2) + "\n");
  return R.pass() ? 0 : 1;
}

Loaded load(const Global& g, const std::string& path) {
  Loaded in = load_input(path);
  if (g.p && g.p != in.et().C.p)
    throw DataError("the file is over F_" + std::to_string(in.et().C.p) + " but --p " + std::to_string(g.p) +
                    " was requested");
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extricat: finite extriangulated categories, mutation triples and induced triangles"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "search order of the frozen triangles (0 = canonical)");
  app.add_option("--reseed", g.reseed, "rebuild under this many further seeds and compare");
  app.add_option("--cap", g.cap, "enumeration cap (also EXTRICAT_CAP)");
  app.add_option("--p", g.p, "field characteristic (gen) or the one the input must have");
  app.add_flag("--timing", g.timing, "add stage timings to the report");
  app.add_flag("--md", g.md, "Markdown instead of JSON");
  app.add_flag("--json", [&](std::int64_t) { g.md = false; }, "JSON output (default)");
  app.add_option("-o,--out", g.out, "output path (default stdout)");

  std::string file, triple;
  auto* validate = app.add_subcommand("validate", "ET axioms and load-time checks");
  validate->add_option("file", file, "category file, - for stdin")->default_val("-");

  auto* mcheck = app.add_subcommand("mutation-check", "MT1-MT4 and the mutation functors");
  auto* induce = app.add_subcommand("induce", "right/left triangle tables and Sigma, Omega");
  auto* axioms = app.add_subcommand("axioms", "RT/LT, pretriangulated and triangulated checks");
  for (auto* s : {mcheck, induce, axioms}) {
    s->add_option("file", file, "category file, - for stdin")->required();
    s->add_option("--triple", triple, "S,Z,V")->required();
  }

  auto* gen = app.add_subcommand("gen", "corpus generators");
  gen->require_subcommand(1);
  int n = 2, table = kTableBound;
  auto* gnak = gen->add_subcommand("nakayama", "module category of F_p[x]/(x^n)");
  auto* gstab = gen->add_subcommand("stable-nakayama", "its stable category as a triangulated input");
  auto* gshift = gen->add_subcommand("shifted-triple", "the triple (0, C, 0) of a triangulated input");
  for (auto* s : {gnak, gstab}) {
    s->add_option("--n", n, "nilpotency length")->required();
    s->add_option("--table", table, "realization table bound |C| + |A|");
  }
  gshift->add_option("file", file, "triangulated file")->required();

  auto* report = app.add_subcommand("report", "render a saved JSON report");
  report->add_option("file", file, "report JSON, - for stdin")->default_val("-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (g.cap) set_enum_cap(g.cap);
    RunOptions opt{g.seed, g.reseed, g.timing};
    if (*validate) return finish(g, run_validate(load(g, file), opt));
    if (*mcheck || *induce || *axioms) {
      Loaded in = load(g, file);
      Triple t = parse_triple(in.et(), triple);
      if (*mcheck) return finish(g, run_mutation_check(in, t, opt));
      if (*induce) return finish(g, run_induce(in, t, opt));
      return finish(g, run_axioms(in, t, opt));
    }
    if (*gen) {
      Elem p = g.p ? g.p : 2;
      if (*gnak) write(g, emit(gen_nakayama(n, p, table)));
      if (*gstab) write(g, emit(gen_stable_nakayama(n, p, table)));
      if (*gshift) {
        Loaded in = load(g, file);
        if (!in.shifted) throw DataError("not a triangulated input");
        const ETCat& et = in.et();
        json ext = json::array();
        for (int i = 0; i < et.n(); ++i)
          for (int j = 0; j < et.n(); ++j)
            if (et.E.dim(i, j)) ext.push_back({et.C.names[i], et.C.names[j], et.E.dim(i, j)});
        json j = {{"triple", "NONE,ALL,NONE"}, {"indecomposables", et.C.names}, {"ext", ext}};
        write(g, j.dump(2) + "\n");
      }
      return 0;
    }
    if (*report) {
      std::stringstream ss;
      if (file == "-") {
        ss << std::cin.rdbuf();
      } else {
        std::ifstream f(file);
        if (!f) throw DataError("cannot open " + file);
        ss << f.rdbuf();
      }
      json j;
      try {
        j = json::parse(ss.str());
      } catch (const json::parse_error& e) {
        throw DataError(std::string("not a report: ") + e.what());
      }
      if (j.value("schema", "") != kReportSchema) throw DataError("not an extricat report");
      write(g, g.md ? render_markdown(j) : j.dump(2) + "\n");
      return j.value("pass", false) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
