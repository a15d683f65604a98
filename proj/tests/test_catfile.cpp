#include <fstream>
#include <sstream>

#include "doctest.h"
#include "extricat/exactcat/errors.hpp"
#include "extricat/workbench/pipeline.hpp"
#include "extricat/workbench/ses_oracle.hpp"

using namespace extricat;
using namespace extricat::workbench;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(EXTRICAT_DATA_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("shipped files round-trip byte for byte") {
  for (const char* f : {"n2.cat", "n3.cat", "n2p3.cat", "stable_n2.cat", "stable_n3.cat"}) {
    CAPTURE(f);
    std::string text = slurp(f);
    REQUIRE_FALSE(text.empty());
    Workspace W = parse_text(text);
    CHECK(emit(W) == text);
    Workspace W2 = parse_text(emit(W));
    CHECK(same_workspace(W, W2));
  }
}

TEST_CASE("shipped N2 has the brute-force ext dims") {
  Workspace W = parse_text(slurp("n2.cat"));
  REQUIRE(W.et->n() == 2);
  CHECK(W.et->C.names == std::vector<std::string>{"M1", "M2"});
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      auto cnt = oracle::ses_classes({c + 1}, {a + 1}, 2, 2);
      std::uint64_t q = 1;
      for (int k = 0; k < W.et->E.dim(c, a); ++k) q *= 2;
      CHECK(cnt.classes == q);
    }
  CHECK(W.et->E.dim(0, 0) == 1);
  CHECK(W.et->subcats.at("P") == Subcat::of(2, {1}));
}

TEST_CASE("generation is deterministic and matches the shipped corpus") {
  CHECK(emit(gen_nakayama(2, 2)) == slurp("n2.cat"));
  CHECK(emit(gen_stable_nakayama(3, 2)) == slurp("stable_n3.cat"));
}

TEST_CASE("a truncated file is a parse error with a position") {
  std::string text = slurp("n2.cat").substr(0, 300);
  try {
    parse_text(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line > 1);
    CHECK(e.col >= 1);
  }
}

TEST_CASE("bad entries are parse errors") {
  std::string text = slurp("n2.cat");
  CHECK_THROWS_AS(parse_text(replace_line(text, "M1 M2 1\n", "M1 M2 x\n")), ParseError);
  CHECK_THROWS_AS(parse_text(replace_line(text, "extricat/1", "extricat/2")), ParseError);
  CHECK_THROWS_AS(parse_text(replace_line(text, "[indec]\nM1\n", "[indec]\nM+1\n")), ParseError);
  // a coordinate outside F_2
  CHECK_THROWS_AS(parse_text(replace_line(text, "M1 M1 M1 : 1\n", "M1 M1 M1 : 2\n")), Error);
}

TEST_CASE("a non-associative composition table is rejected") {
  std::string text = slurp("n2.cat");
  // drop the model line so the tables alone are judged
  text = replace_line(text, "model nakayama 2\n", "");
  CHECK_NOTHROW(parse_text(text));
  std::string bad = replace_line(text, "M2 M2 M2 : 1 0 0 1 0 1 0 0", "M2 M2 M2 : 1 0 0 1 0 1 1 0");
  CHECK_THROWS_AS(parse_text(bad), DataError);
}

TEST_CASE("a model line must agree with the tables") {
  std::string text = slurp("n2.cat");
  CHECK_THROWS_AS(parse_text(replace_line(text, "model nakayama 2", "model nakayama 3")), Error);
}

TEST_CASE("an input with neither ext nor triangles cannot be loaded") {
  std::string text = slurp("stable_n2.cat");
  text = replace_line(text.substr(0, text.find("[shift]")), "model stable-nakayama 2\n", "");
  CHECK_THROWS_AS(load_text(text), DataError);
}

TEST_CASE("N1 has no extensions and validates") {
  Workspace W = gen_nakayama(1, 2);
  CHECK(W.et->n() == 1);
  CHECK(W.et->E.dim(0, 0) == 0);
  CHECK(W.et->s.size() == 0);
  Loaded L = load_text(emit(W));
  CHECK(run_validate(L, {}).pass());
}

TEST_CASE("size guard on generated categories") {
  CHECK_THROWS_AS(gen_nakayama(7, 2), Error);
  CHECK_THROWS_AS(gen_nakayama(2, 4), Error);
}

TEST_CASE("digest is FNV-1a 64") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
}
