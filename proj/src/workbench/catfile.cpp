#include "extricat/workbench/catfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "extricat/exactcat/errors.hpp"
#include "extricat/workbench/generators.hpp"

namespace extricat::workbench {

// ---- shift helpers ----

Obj Triangulated::on(const Obj& X) const {
  std::vector<int> v;
  for (int i : X.s) v.insert(v.end(), shift.at(i).s.begin(), shift.at(i).s.end());
  return Obj(v);
}

Sum Triangulated::shifted(const Category& C, const Obj& X) const {
  std::vector<Obj> parts;
  for (int i : X.s) parts.push_back(shift.at(i));
  return C.sum(parts);
}

Mor Triangulated::on(const Category& C, const Mor& f) const {
  Sum D = shifted(C, f.dom), T = shifted(C, f.cod);
  Mor out = C.zero(D.obj, T.obj);
  for (int t = 0; t < f.cod.size(); ++t)
    for (int s = 0; s < f.dom.size(); ++s) {
      int i = f.dom[s], j = f.cod[t];
      Vec b = C.block(f, t, s);
      Mor g = C.zero(shift[i], shift[j]);
      for (int k = 0; k < C.hom(i, j); ++k)
        if (b[k]) g = C.add(g, C.scale(Mor{shift[i], shift[j], basis.at({i, j, k})}, b[k]));
      out = C.add(out, C.o(T.inj[t], C.o(g, D.proj[s])));
    }
  return out;
}

Vec Triangulated::to_ext(const Category& C, const Obj& Cobj, const Obj& A, const Mor& z) const {
  Sum SA = shifted(C, A), SC = C.sum([&] {
    std::vector<Obj> v;
    for (int i : Cobj.s) v.push_back(Obj::of(i));
    return v;
  }());
  if (!(z.dom == Cobj) || !(z.cod == SA.obj)) throw DomainError("to_ext: the map must go C -> A[1]");
  Vec out;
  for (int t = 0; t < A.size(); ++t)
    for (int s = 0; s < Cobj.size(); ++s) {
      Mor piece = C.o(SA.proj[t], C.o(z, SC.inj[s]));
      out.insert(out.end(), piece.c.begin(), piece.c.end());
    }
  return out;
}

Mor Triangulated::to_mor(const Category& C, const ExtElem& d) const {
  Sum SA = shifted(C, d.A);
  std::vector<Obj> parts;
  for (int i : d.C.s) parts.push_back(Obj::of(i));
  Sum SC = C.sum(parts);
  Mor z = C.zero(d.C, SA.obj);
  int pos = 0;
  for (int t = 0; t < d.A.size(); ++t)
    for (int s = 0; s < d.C.size(); ++s) {
      const Obj& tgt = shift[d.A[t]];
      int len = C.hom(Obj::of(d.C[s]), tgt);
      Mor piece{Obj::of(d.C[s]), tgt, Vec(d.c.begin() + pos, d.c.begin() + pos + len)};
      pos += len;
      z = C.add(z, C.o(SA.inj[t], C.o(piece, SC.proj[s])));
    }
  return z;
}

// ---- lexer ----

namespace {

struct Tok {
  std::string s;
  int col;
};
struct Line {
  int no;
  std::vector<Tok> t;
  int end;  // column after the last character
};

std::vector<Tok> split(const std::string& line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

const std::vector<std::string> kSections = {"indec", "hom",    "compose", "identity", "ext",      "ract",
                                            "lact",  "realize", "subcats", "shift",    "triangles"};

struct Raw {
  std::string name;
  Elem p = 0;
  Line pline{};
  std::optional<ModelRef> model;
  Line mline{};
  int table = 0;
  std::map<std::string, std::vector<Line>> sec;
  std::map<std::string, int> secline;
  int last_line = 0;
};

[[noreturn]] void err(const Line& l, int col, const std::string& msg) { throw ParseError(l.no, col, msg); }
[[noreturn]] void err(const Line& l, const Tok& t, const std::string& msg) { throw ParseError(l.no, t.col, msg); }

long number(const Line& l, const Tok& t) {
  if (t.s.empty() || !std::all_of(t.s.begin(), t.s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    err(l, t, "expected a number, got '" + t.s + "'");
  if (t.s.size() > 9) err(l, t, "number too large");
  return std::stol(t.s);
}

Raw lex(const std::string& text) {
  Raw r;
  std::istringstream in(text);
  std::string s;
  int no = 0;
  std::string cur;
  bool header = false;
  while (std::getline(in, s)) {
    ++no;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    Line l{no, split(s), static_cast<int>(s.size()) + 1};
    r.last_line = no;
    if (l.t.empty() || l.t[0].s[0] == '#') continue;
    if (!header) {
      if (l.t.size() != 1 || l.t[0].s != "extricat/1") err(l, l.t[0], "expected the header 'extricat/1'");
      header = true;
      continue;
    }
    const std::string& k = l.t[0].s;
    if (k.front() == '[') {
      if (k.back() != ']' || l.t.size() != 1) err(l, l.t[0], "malformed section header");
      cur = k.substr(1, k.size() - 2);
      if (std::find(kSections.begin(), kSections.end(), cur) == kSections.end())
        err(l, l.t[0], "unknown section [" + cur + "]");
      if (r.sec.count(cur)) err(l, l.t[0], "section [" + cur + "] appears twice");
      r.sec[cur];
      r.secline[cur] = no;
      continue;
    }
    if (!cur.empty()) {
      r.sec[cur].push_back(l);
      continue;
    }
    // header keys
    if (k == "name") {
      if (l.t.size() != 2) err(l, l.end, "name takes one token");
      r.name = l.t[1].s;
    } else if (k == "p") {
      if (l.t.size() != 2) err(l, l.end, "p takes one number");
      long p = number(l, l.t[1]);
      if (p < 2 || !is_prime(static_cast<Elem>(p))) err(l, l.t[1], "p must be prime");
      if (p > 251) err(l, l.t[1], "p too large for desk scale");
      r.p = static_cast<Elem>(p);
      r.pline = l;
    } else if (k == "model") {
      if (l.t.size() != 3) err(l, l.end, "model takes a kind and a length");
      r.model = ModelRef{l.t[1].s, static_cast<int>(number(l, l.t[2]))};
      if (r.model->kind != "nakayama" && r.model->kind != "stable-nakayama") err(l, l.t[1], "unknown model kind");
      r.mline = l;
    } else if (k == "table") {
      if (l.t.size() != 2) err(l, l.end, "table takes one number");
      r.table = static_cast<int>(number(l, l.t[1]));
    } else {
      err(l, l.t[0], "unknown header key '" + k + "'");
    }
  }
  if (!header) throw ParseError(no + 1, 1, "empty input, expected the header 'extricat/1'");
  if (r.p == 0) throw ParseError(r.last_line + 1, 1, "missing 'p' line");
  if (!r.sec.count("indec")) throw ParseError(r.last_line + 1, 1, "missing section [indec]");
  return r;
}

// ---- builder ----

struct Builder {
  const Raw& r;
  std::map<std::string, int> idx;

  int indec(const Line& l, const Tok& t) const {
    auto it = idx.find(t.s);
    if (it == idx.end()) err(l, t, "unknown indecomposable '" + t.s + "'");
    return it->second;
  }
  Obj obj(const Line& l, const Tok& t) const {
    if (t.s == "0") return Obj();
    std::vector<int> v;
    size_t a = 0;
    while (true) {
      size_t b = t.s.find('+', a);
      std::string part = t.s.substr(a, b == std::string::npos ? std::string::npos : b - a);
      auto it = idx.find(part);
      if (it == idx.end()) throw ParseError(l.no, t.col + static_cast<int>(a), "unknown indecomposable '" + part + "'");
      v.push_back(it->second);
      if (b == std::string::npos) break;
      a = b + 1;
    }
    return Obj(v);
  }
  // tokens [from, to) as field elements; "-" alone is the empty list
  Vec elems(const Line& l, size_t from, size_t to, size_t want, int errcol) const {
    Vec v;
    if (to - from == 1 && l.t[from].s == "-") {
      if (want != 0) err(l, l.t[from], "expected " + std::to_string(want) + " entries, got none");
      return v;
    }
    for (size_t k = from; k < to; ++k) {
      long x = number(l, l.t[k]);
      if (x >= static_cast<long>(r.p)) err(l, l.t[k], "entry " + l.t[k].s + " is not a residue mod " + std::to_string(r.p));
      v.push_back(static_cast<Elem>(x));
    }
    if (v.size() != want)
      err(l, to > from ? l.t[from].col : errcol,
          "expected " + std::to_string(want) + " entries, got " + std::to_string(v.size()));
    return v;
  }
  // position of the ':' token; everything after it is the payload
  size_t colon(const Line& l, size_t at) const {
    if (l.t.size() <= at || l.t[at].s != ":") err(l, l.t.size() > at ? l.t[at].col : l.end, "expected ':'");
    if (l.t.size() == at + 1) err(l, l.end, "missing entries after ':' (write '-' for none)");
    return at;
  }
  // split at ';' into fields (each a token range)
  std::vector<std::pair<size_t, size_t>> fields(const Line& l, size_t want) const {
    std::vector<std::pair<size_t, size_t>> f;
    size_t a = 0;
    for (size_t k = 0; k <= l.t.size(); ++k)
      if (k == l.t.size() || l.t[k].s == ";") {
        if (k == a) err(l, k < l.t.size() ? l.t[k].col : l.end, "empty field (write '-' for none)");
        f.push_back({a, k});
        a = k + 1;
      }
    if (f.size() != want)
      err(l, l.end, "expected " + std::to_string(want) + " fields separated by ';', got " + std::to_string(f.size()));
    return f;
  }
  void arity(const Line& l, size_t n) const {
    if (l.t.size() < n) err(l, l.end, "too few tokens");
  }
};

const std::vector<Line>& section(const Raw& r, const std::string& s) {
  static const std::vector<Line> none;
  auto it = r.sec.find(s);
  return it == r.sec.end() ? none : it->second;
}

}  // namespace

Workspace parse_text(const std::string& text) {
  Raw r = lex(text);
  Builder B{r, {}};
  Workspace W;
  W.name = r.name;
  W.model = r.model;
  W.table_bound = r.table;

  std::vector<std::string> names;
  for (const Line& l : section(r, "indec")) {
    if (l.t.size() != 1) err(l, l.t[1], "one name per line in [indec]");
    const std::string& nm = l.t[0].s;
    if (nm == "0" || nm == "-" || nm == "ALL" || nm == "NONE" ||
        nm.find_first_of("+;:,") != std::string::npos)
      err(l, l.t[0], "reserved name or character in '" + nm + "'");
    if (B.idx.count(nm)) err(l, l.t[0], "duplicate indecomposable '" + nm + "'");
    B.idx[nm] = static_cast<int>(names.size());
    names.push_back(nm);
  }
  Category C(r.p, names);
  int n = C.n();
  for (const Line& l : section(r, "hom")) {
    if (l.t.size() != 3) err(l, l.end, "expected 'X Y dim'");
    int i = B.indec(l, l.t[0]), j = B.indec(l, l.t[1]);
    C.set_hom(i, j, static_cast<int>(number(l, l.t[2])));
  }
  C.alloc_tables();
  std::set<std::tuple<int, int, int>> seen;
  for (const Line& l : section(r, "compose")) {
    B.arity(l, 4);
    int i = B.indec(l, l.t[0]), j = B.indec(l, l.t[1]), k = B.indec(l, l.t[2]);
    size_t c = B.colon(l, 3);
    size_t want = static_cast<size_t>(C.hom(i, j)) * C.hom(j, k) * C.hom(i, k);
    C.comp_table(i, j, k) = B.elems(l, c + 1, l.t.size(), want, l.end);
  }
  for (const Line& l : section(r, "identity")) {
    B.arity(l, 2);
    int i = B.indec(l, l.t[0]);
    size_t c = B.colon(l, 1);
    C.idc(i) = B.elems(l, c + 1, l.t.size(), C.hom(i, i), l.end);
  }
  C.validate();
  W.et = std::make_unique<ETCat>(std::move(C));
  ETCat& et = *W.et;
  const Category& K = et.C;
  et.name = W.name;
  et.table_bound = W.table_bound;

  W.has_ext = r.sec.count("ext") > 0;
  for (const Line& l : section(r, "ext")) {
    if (l.t.size() != 3) err(l, l.end, "expected 'C A dim'");
    et.E.set_dim(B.indec(l, l.t[0]), B.indec(l, l.t[1]), static_cast<int>(number(l, l.t[2])));
  }
  et.E.alloc();
  for (const Line& l : section(r, "ract")) {
    B.arity(l, 6);
    int j = B.indec(l, l.t[0]), i = B.indec(l, l.t[1]), A = B.indec(l, l.t[3]);
    int k = static_cast<int>(number(l, l.t[2]));
    if (k >= K.hom(j, i)) err(l, l.t[2], "basis index out of range");
    size_t c = B.colon(l, 4);
    Mat& M = et.E.ract(j, i, k, A);
    Vec v = B.elems(l, c + 1, l.t.size(), static_cast<size_t>(M.rows()) * M.cols(), l.end);
    for (int a = 0; a < M.rows(); ++a)
      for (int b = 0; b < M.cols(); ++b) M.at(a, b) = v[static_cast<size_t>(a) * M.cols() + b];
  }
  for (const Line& l : section(r, "lact")) {
    B.arity(l, 6);
    int a0 = B.indec(l, l.t[0]), b0 = B.indec(l, l.t[1]), Cc = B.indec(l, l.t[3]);
    int k = static_cast<int>(number(l, l.t[2]));
    if (k >= K.hom(a0, b0)) err(l, l.t[2], "basis index out of range");
    size_t c = B.colon(l, 4);
    Mat& M = et.E.lact(a0, b0, k, Cc);
    Vec v = B.elems(l, c + 1, l.t.size(), static_cast<size_t>(M.rows()) * M.cols(), l.end);
    for (int a = 0; a < M.rows(); ++a)
      for (int b = 0; b < M.cols(); ++b) M.at(a, b) = v[static_cast<size_t>(a) * M.cols() + b];
  }
  for (const Line& l : section(r, "realize")) {
    auto f = B.fields(l, 6);
    for (int q : {0, 1, 3})
      if (f[q].second - f[q].first != 1) err(l, l.t[f[q].first], "expected one object");
    Obj Cc = B.obj(l, l.t[f[0].first]), A = B.obj(l, l.t[f[1].first]), Bm = B.obj(l, l.t[f[3].first]);
    Vec cls = B.elems(l, f[2].first, f[2].second, et.E.dim(Cc, A), l.end);
    Vec x = B.elems(l, f[4].first, f[4].second, K.hom(A, Bm), l.end);
    Vec y = B.elems(l, f[5].first, f[5].second, K.hom(Bm, Cc), l.end);
    et.s.insert(K, Conflation{Mor{A, Bm, x}, Mor{Bm, Cc, y}, ExtElem{Cc, A, cls}});
  }
  for (const Line& l : section(r, "subcats")) {
    B.arity(l, 3);
    size_t c = B.colon(l, 1);
    const std::string& nm = l.t[0].s;
    if (et.subcats.count(nm)) err(l, l.t[0], "duplicate subcategory '" + nm + "'");
    Subcat D(n);
    if (!(l.t.size() == c + 2 && l.t[c + 1].s == "-"))
      for (size_t k = c + 1; k < l.t.size(); ++k) D.in[B.indec(l, l.t[k])] = 1;
    et.subcats[nm] = D;
  }
  if (r.sec.count("shift") || r.sec.count("triangles")) {
    Triangulated T;
    T.shift.assign(n, Obj());
    std::vector<char> has(n, 0);
    for (const Line& l : section(r, "shift")) {
      B.arity(l, 3);
      if (l.t[1].s == ":") {
        if (l.t.size() != 3) err(l, l.end, "expected 'X : X[1]'");
        int i = B.indec(l, l.t[0]);
        T.shift[i] = B.obj(l, l.t[2]);
        has[i] = 1;
      }
    }
    for (int i = 0; i < n; ++i)
      if (!has[i]) throw ParseError(r.secline.count("shift") ? r.secline.at("shift") : r.last_line + 1, 1,
                                    "no shift declared for " + names[i]);
    for (const Line& l : section(r, "shift")) {
      if (l.t[1].s == ":") continue;
      B.arity(l, 5);
      int i = B.indec(l, l.t[0]), j = B.indec(l, l.t[1]);
      int k = static_cast<int>(number(l, l.t[2]));
      if (k >= K.hom(i, j)) err(l, l.t[2], "basis index out of range");
      size_t c = B.colon(l, 3);
      T.basis[{i, j, k}] = B.elems(l, c + 1, l.t.size(), K.hom(T.shift[i], T.shift[j]), l.end);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < K.hom(i, j); ++k)
          if (!T.basis.count({i, j, k}))
            throw ParseError(r.secline.count("shift") ? r.secline.at("shift") : r.last_line + 1, 1,
                             "no shift declared for basis " + std::to_string(k) + " of Hom(" + names[i] + "," +
                                 names[j] + ")");
    for (const Line& l : section(r, "triangles")) {
      auto f = B.fields(l, 6);
      for (int q : {0, 1, 2})
        if (f[q].second - f[q].first != 1) err(l, l.t[f[q].first], "expected one object");
      Obj A = B.obj(l, l.t[f[0].first]), Bm = B.obj(l, l.t[f[1].first]), Cc = B.obj(l, l.t[f[2].first]);
      Obj A1 = T.shifted(K, A).obj;
      Vec x = B.elems(l, f[3].first, f[3].second, K.hom(A, Bm), l.end);
      Vec y = B.elems(l, f[4].first, f[4].second, K.hom(Bm, Cc), l.end);
      Vec z = B.elems(l, f[5].first, f[5].second, K.hom(Cc, A1), l.end);
      T.triangles.push_back({Mor{A, Bm, x}, Mor{Bm, Cc, y}, Mor{Cc, A1, z}});
    }
    W.tri = std::move(T);
  }
  if (W.model) {
    try {
      attach_model(W);
    } catch (const DataError& e) {
      throw ParseError(r.mline.no, r.mline.t[1].col, std::string("model does not match the tables: ") + e.what());
    }
  }
  validate_workspace(W);
  return W;
}

Workspace parse_file(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open " + path);
    ss << f.rdbuf();
  }
  return parse_text(ss.str());
}

void validate_workspace(const Workspace& W) {
  const ETCat& et = *W.et;
  const Category& C = et.C;
  if (W.has_ext) {
    Report b = et.E.validate_bifunctor();
    if (!b.pass) throw DataError("E is not a bifunctor: " + b.detail + " " + b.witness.dump());
    for (const Conflation& c : et.s.records())
      if (!vzero(C.o(c.y, c.x).c))
        throw DataError("realization record is not a complex: " + et.conf_json(c).dump());
  }
  if (W.tri) {
    const Triangulated& T = *W.tri;
    // functoriality of the shift on basis pairs, and identities
    for (int i = 0; i < C.n(); ++i) {
      if (C.hom(i, i) == 0) continue;
      Mor id = C.id(Obj::of(i));
      if (!(T.on(C, id) == C.id(T.on(Obj::of(i)))))
        throw DataError("shift does not preserve the identity of " + C.names[i]);
    }
    for (int i = 0; i < C.n(); ++i)
      for (int j = 0; j < C.n(); ++j)
        for (int l = 0; l < C.n(); ++l)
          for (int u = 0; u < C.hom(i, j); ++u)
            for (int v = 0; v < C.hom(j, l); ++v) {
              Mor a = C.basis(i, j, u), b = C.basis(j, l, v);
              if (!(T.on(C, C.o(b, a)) == C.o(T.on(C, b), T.on(C, a))))
                throw DataError("shift is not functorial on " + C.names[i] + "," + C.names[j] + "," + C.names[l]);
            }
    for (const DeclaredTriangle& t : T.triangles) {
      Mor x1 = T.on(C, t.x);
      if (!vzero(C.o(t.y, t.x).c) || !vzero(C.o(t.z, t.y).c) || !vzero(C.o(x1, t.z).c))
        throw DataError("declared triangle has a nonzero composite: " + mor_json(C, t.x).dump());
    }
  }
}

// ---- emitter ----

namespace {

std::string join(const Vec& v) {
  if (v.empty()) return "-";
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

std::string flat(const Mat& M) { return join(M.data()); }

}  // namespace

std::string emit(const Workspace& W) {
  const ETCat& et = *W.et;
  const Category& C = et.C;
  const auto& nm = C.names;
  int n = C.n();
  std::ostringstream o;
  o << "extricat/1\n";
  if (!W.name.empty()) o << "name " << W.name << "\n";
  o << "p " << C.p << "\n";
  if (W.model) o << "model " << W.model->kind << " " << W.model->n << "\n";
  if (W.table_bound) o << "table " << W.table_bound << "\n";
  o << "[indec]\n";
  for (auto& s : nm) o << s << "\n";
  o << "[hom]\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (C.hom(i, j)) o << nm[i] << " " << nm[j] << " " << C.hom(i, j) << "\n";
  o << "[compose]\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (C.hom(i, j) && C.hom(j, l) && C.hom(i, l))
          o << nm[i] << " " << nm[j] << " " << nm[l] << " : " << join(C.comp_table(i, j, l)) << "\n";
  o << "[identity]\n";
  for (int i = 0; i < n; ++i)
    if (C.hom(i, i)) o << nm[i] << " : " << join(C.idc(i)) << "\n";
  if (W.has_ext) {
    const ExtStructure& E = et.E;
    o << "[ext]\n";
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        if (E.dim(c, a)) o << nm[c] << " " << nm[a] << " " << E.dim(c, a) << "\n";
    o << "[ract]\n";
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < C.hom(j, i); ++k)
          for (int A = 0; A < n; ++A) {
            const Mat& M = E.ract(j, i, k, A);
            if (M.rows() && M.cols()) o << nm[j] << " " << nm[i] << " " << k << " " << nm[A] << " : " << flat(M) << "\n";
          }
    o << "[lact]\n";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < C.hom(a, b); ++k)
          for (int Cc = 0; Cc < n; ++Cc) {
            const Mat& M = E.lact(a, b, k, Cc);
            if (M.rows() && M.cols()) o << nm[a] << " " << nm[b] << " " << k << " " << nm[Cc] << " : " << flat(M) << "\n";
          }
    o << "[realize]\n";
    for (const Conflation& c : et.s.records())
      o << C.name(c.C()) << " ; " << C.name(c.A()) << " ; " << join(c.delta.c) << " ; " << C.name(c.B()) << " ; "
        << join(c.x.c) << " ; " << join(c.y.c) << "\n";
  }
  if (!et.subcats.empty()) {
    o << "[subcats]\n";
    for (auto& [k, D] : et.subcats) {
      o << k << " :";
      auto mem = D.members();
      if (mem.empty()) o << " -";
      for (int i : mem) o << " " << nm[i];
      o << "\n";
    }
  }
  if (W.tri) {
    const Triangulated& T = *W.tri;
    o << "[shift]\n";
    for (int i = 0; i < n; ++i) o << nm[i] << " : " << C.name(T.shift[i]) << "\n";
    for (auto& [key, v] : T.basis) {
      auto [i, j, k] = key;
      o << nm[i] << " " << nm[j] << " " << k << " : " << join(v) << "\n";
    }
    o << "[triangles]\n";
    for (const DeclaredTriangle& t : T.triangles)
      o << C.name(t.x.dom) << " ; " << C.name(t.x.cod) << " ; " << C.name(t.y.cod) << " ; " << join(t.x.c) << " ; "
        << join(t.y.c) << " ; " << join(t.z.c) << "\n";
  }
  return o.str();
}

bool same_workspace(const Workspace& a, const Workspace& b) {
  const Category &A = a.et->C, &B = b.et->C;
  if (a.name != b.name || a.has_ext != b.has_ext || a.table_bound != b.table_bound) return false;
  if (a.model.has_value() != b.model.has_value()) return false;
  if (a.model && (a.model->kind != b.model->kind || a.model->n != b.model->n)) return false;
  if (A.p != B.p || A.names != B.names) return false;
  int n = A.n();
  for (int i = 0; i < n; ++i) {
    if (A.idc(i) != B.idc(i)) return false;
    for (int j = 0; j < n; ++j) {
      if (A.hom(i, j) != B.hom(i, j)) return false;
      for (int l = 0; l < n; ++l)
        if (A.comp_table(i, j, l) != B.comp_table(i, j, l)) return false;
    }
  }
  if (a.has_ext) {
    const ExtStructure &E = a.et->E, &F = b.et->E;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (E.dim(i, j) != F.dim(i, j)) return false;
        for (int k = 0; k < A.hom(i, j); ++k)
          for (int X = 0; X < n; ++X)
            if (!(E.ract(i, j, k, X) == F.ract(i, j, k, X)) || !(E.lact(i, j, k, X) == F.lact(i, j, k, X)))
              return false;
      }
    auto ra = a.et->s.records(), rb = b.et->s.records();
    if (ra.size() != rb.size()) return false;
    for (size_t k = 0; k < ra.size(); ++k)
      if (!(ra[k].x == rb[k].x) || !(ra[k].y == rb[k].y) || !(ra[k].delta == rb[k].delta)) return false;
  }
  if (a.et->subcats != b.et->subcats) return false;
  if (a.tri.has_value() != b.tri.has_value()) return false;
  if (a.tri) {
    if (a.tri->shift != b.tri->shift || a.tri->basis != b.tri->basis) return false;
    if (a.tri->triangles.size() != b.tri->triangles.size()) return false;
    for (size_t k = 0; k < a.tri->triangles.size(); ++k) {
      auto &s = a.tri->triangles[k], &t = b.tri->triangles[k];
      if (!(s.x == t.x) || !(s.y == t.y) || !(s.z == t.z)) return false;
    }
  }
  return true;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace extricat::workbench
