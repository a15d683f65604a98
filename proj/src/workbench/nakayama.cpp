#include "extricat/workbench/nakayama.hpp"

#include <algorithm>

#include "extricat/exactcat/errors.hpp"

namespace extricat::nakayama {

namespace {

Vec flat(const Mat& M) { return M.data(); }

Mat unflat(const Vec& v, int r, int c, Elem p) {
  Mat M(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.at(i, j) = v[i * c + j];
  return M;
}

Mat power(const Mat& N, int k) {
  Mat P = Mat::identity(N.rows(), N.p());
  for (int i = 0; i < k; ++i) P = P * N;
  return P;
}

Mat sub(const Mat& M, int r0, int c0, int r, int c) {
  Mat S(r, c, M.p());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) S.at(i, j) = M.at(r0 + i, c0 + j);
  return S;
}

void put(Mat& M, int r0, int c0, const Mat& S) {
  for (int i = 0; i < S.rows(); ++i)
    for (int j = 0; j < S.cols(); ++j) M.at(r0 + i, c0 + j) = S.at(i, j);
}

}  // namespace

Model::Model(int n, Elem p) : n_(n), p_(p) {
  if (n < 1) throw DomainError("Nakayama length must be at least 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  ebasis_.assign(n * n, {});
  reader_.assign(n * n, Mat());
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      int lc = len(c), la = len(a);
      Mat Na = jordan(la), Nc = jordan(lc);
      int m = la * lc;
      Mat Z = matrix_of(m, m, p, [&](const Vec& v) {
        Mat th = unflat(v, la, lc, p), acc(la, lc, p);
        for (int k = 0; k < n; ++k) acc = acc + power(Na, k) * th * power(Nc, n - 1 - k);
        return flat(acc);
      });
      Mat B = matrix_of(m, m, p, [&](const Vec& v) {
        Mat ph = unflat(v, la, lc, p);
        return flat(Na * ph - ph * Nc);
      });
      std::vector<Vec> span;
      for (int j = 0; j < B.cols(); ++j) span.push_back(B.col(j));
      Mat K = Z.kernel();
      std::vector<Vec> chosen;
      for (int j = 0; j < K.cols(); ++j) {
        Vec v = K.col(j);
        if (Span(m, p, span).contains(v)) continue;
        span.push_back(v);
        chosen.push_back(v);
      }
      for (auto& v : chosen) ebasis_[c * n + a].push_back(unflat(v, la, lc, p));
      std::vector<Vec> cols = chosen;
      for (int j = 0; j < B.cols(); ++j) cols.push_back(B.col(j));
      reader_[c * n + a] = Mat::from_cols(m, cols, p);
    }
}

Mat Model::jordan(int l) const {
  Mat N(l, l, p_);
  for (int j = 0; j + 1 < l; ++j) N.at(j + 1, j) = 1;
  return N;
}

Mat Model::phi(int a, int b, int k) const {
  int t = std::max(0, b - a) + k;
  Mat F(b, a, p_);
  for (int j = 0; j < a; ++j)
    if (j + t < b) F.at(j + t, j) = 1;
  return F;
}

Category Model::category() const {
  std::vector<std::string> names;
  for (int i = 0; i < n_; ++i) names.push_back("M" + std::to_string(i + 1));
  Category C(p_, names);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) C.set_hom(i, j, std::min(len(i), len(j)));
  C.alloc_tables();
  for (int i = 0; i < n_; ++i) {
    C.idc(i)[0] = 1;
    for (int j = 0; j < n_; ++j)
      for (int l = 0; l < n_; ++l) {
        int li = len(i), lj = len(j), ll = len(l);
        Vec& tab = C.comp_table(i, j, l);
        for (int u = 0; u < C.hom(i, j); ++u)
          for (int v = 0; v < C.hom(j, l); ++v) {
            int s = std::max(0, lj - li) + u + std::max(0, ll - lj) + v;
            if (s >= ll) continue;
            int w = s - std::max(0, ll - li);
            tab[(static_cast<size_t>(u) * C.hom(j, l) + v) * C.hom(i, l) + w] = 1;
          }
      }
  }
  return C;
}

void Model::fill_ext(ExtStructure& E) const {
  for (int c = 0; c < n_; ++c)
    for (int a = 0; a < n_; ++a) E.set_dim(c, a, static_cast<int>(ebasis_[c * n_ + a].size()));
  E.alloc();
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < std::min(len(i), len(j)); ++k) {
        Mat B = phi(len(j), len(i), k);  // M_j -> M_i
        for (int A = 0; A < n_; ++A) {
          Mat& R = E.ract(j, i, k, A);
          for (int q = 0; q < E.dim(i, A); ++q) {
            Vec col = class_coords(Obj::of(j), Obj::of(A), ebasis_[i * n_ + A][q] * B);
            for (int r = 0; r < R.rows(); ++r) R.at(r, q) = col[r];
          }
          Mat& L = E.lact(j, i, k, A);  // E(A, j) -> E(A, i)
          for (int q = 0; q < E.dim(A, j); ++q) {
            Vec col = class_coords(Obj::of(A), Obj::of(i), B * ebasis_[A * n_ + j][q]);
            for (int r = 0; r < L.rows(); ++r) L.at(r, q) = col[r];
          }
        }
      }
}

int Model::dim(const Obj& X) const {
  int d = 0;
  for (int i : X.s) d += len(i);
  return d;
}

Mat Model::nilpotent(const Obj& X) const {
  Mat N(dim(X), dim(X), p_);
  int off = 0;
  for (int i : X.s) {
    put(N, off, off, jordan(len(i)));
    off += len(i);
  }
  return N;
}

Mat Model::matrix(const Mor& f) const {
  Mat F(dim(f.cod), dim(f.dom), p_);
  int ro = 0, k = 0;
  std::vector<int> co(f.dom.size() + 1, 0);
  for (int s = 0; s < f.dom.size(); ++s) co[s + 1] = co[s] + len(f.dom[s]);
  for (int t = 0; t < f.cod.size(); ++t) {
    for (int s = 0; s < f.dom.size(); ++s) {
      int a = len(f.dom[s]), b = len(f.cod[t]);
      Mat blk(b, a, p_);
      for (int q = 0; q < std::min(a, b); ++q, ++k) {
        if (!f.c[k]) continue;
        Mat ph = phi(a, b, q);
        for (int z = 0; z < a; ++z)
          for (int r = 0; r < b; ++r)
            if (ph.at(r, z)) blk.at(r, z) = fadd(blk.at(r, z), f.c[k], p_);
      }
      put(F, ro, co[s], blk);
    }
    ro += len(f.cod[t]);
  }
  return F;
}

Mor Model::from_matrix(const Obj& X, const Obj& Y, const Mat& F) const {
  Vec c;
  int ro = 0;
  for (int t = 0; t < Y.size(); ++t) {
    int co = 0;
    for (int s = 0; s < X.size(); ++s) {
      int a = len(X[s]), b = len(Y[t]), t0 = std::max(0, b - a);
      for (int q = 0; q < std::min(a, b); ++q) c.push_back(F.at(ro + t0 + q, co));
      co += a;
    }
    ro += len(Y[t]);
  }
  Mor f{X, Y, c};
  if (!(matrix(f) == F)) throw DataError("linear map is not a module homomorphism between the given Jordan modules");
  return f;
}

Model::Decomp Model::decompose(const Mat& N) const {
  int d = N.rows();
  if (d == 0) return {Obj(), Mat(0, 0, p_)};
  int m = 0;
  std::vector<Mat> pw{Mat::identity(d, p_)};
  while (!pw.back().is_zero()) {
    pw.push_back(pw.back() * N);
    ++m;
    if (m > d) throw DataError("matrix is not nilpotent");
  }
  std::vector<std::pair<Vec, int>> gens;
  for (int k = m; k >= 1; --k) {
    std::vector<Vec> have;
    Mat Kprev = pw[k - 1].kernel();
    for (int j = 0; j < Kprev.cols(); ++j) have.push_back(Kprev.col(j));
    for (auto& [g, l] : gens) have.push_back(pw[l - k] * g);
    Mat K = pw[k].kernel();
    for (int j = 0; j < K.cols(); ++j) {
      Vec w = K.col(j);
      if (Span(d, p_, have).contains(w)) continue;
      have.push_back(w);
      gens.push_back({w, k});
    }
  }
  std::stable_sort(gens.begin(), gens.end(), [](auto& a, auto& b) { return a.second < b.second; });
  std::vector<Vec> cols;
  std::vector<int> idx;
  for (auto& [g, l] : gens) {
    idx.push_back(l - 1);
    for (int j = 0; j < l; ++j) cols.push_back(pw[j] * g);
  }
  if (static_cast<int>(cols.size()) != d) throw DataError("Jordan decomposition lost dimensions");
  if (!idx.empty() && idx.back() >= n_) throw DataError("Jordan block longer than the algebra allows");
  return {Obj(idx), Mat::from_cols(d, cols, p_)};
}

Mat Model::cocycle(const ExtElem& d) const {
  Mat th(dim(d.A), dim(d.C), p_);
  auto off = std::vector<int>(d.C.size() + 1, 0);
  for (int s = 0; s < d.C.size(); ++s) off[s + 1] = off[s] + len(d.C[s]);
  int k = 0, ro = 0;
  for (int t = 0; t < d.A.size(); ++t) {
    for (int s = 0; s < d.C.size(); ++s) {
      const auto& B = ebasis_[d.C[s] * n_ + d.A[t]];
      Mat blk(len(d.A[t]), len(d.C[s]), p_);
      for (const Mat& b : B) {
        Elem e = d.c[k++];
        if (!e) continue;
        for (int i = 0; i < b.rows(); ++i)
          for (int j = 0; j < b.cols(); ++j) blk.at(i, j) = fadd(blk.at(i, j), fmul(e, b.at(i, j), p_), p_);
      }
      put(th, ro, off[s], blk);
    }
    ro += len(d.A[t]);
  }
  return th;
}

Vec Model::class_coords(const Obj& C, const Obj& A, const Mat& theta) const {
  Vec out;
  int ro = 0;
  for (int t = 0; t < A.size(); ++t) {
    int co = 0;
    for (int s = 0; s < C.size(); ++s) {
      int la = len(A[t]), lc = len(C[s]);
      Mat blk = sub(theta, ro, co, la, lc);
      const Mat& R = reader_[C[s] * n_ + A[t]];
      int e = static_cast<int>(ebasis_[C[s] * n_ + A[t]].size());
      if (R.cols() > 0) {
        auto x = R.solve(flat(blk));
        if (!x) throw DataError("matrix is not a cocycle for E(" + std::to_string(C[s] + 1) + "," + std::to_string(A[t] + 1) + ")");
        out.insert(out.end(), x->begin(), x->begin() + e);
      } else if (!blk.is_zero()) {
        throw DataError("nonzero cocycle in a zero extension space");
      }
      co += lc;
    }
    ro += len(A[t]);
  }
  return out;
}

Conflation Model::realize(const ExtElem& d) const {
  int da = dim(d.A), dc = dim(d.C);
  Mat NB(da + dc, da + dc, p_);
  put(NB, 0, 0, nilpotent(d.A));
  put(NB, da, da, nilpotent(d.C));
  put(NB, 0, da, cocycle(d));
  Decomp D = decompose(NB);
  auto Pinv = D.P.inverse();
  if (!Pinv) throw DataError("Jordan basis is singular");
  Mat X0(da + dc, da, p_), Y0(dc, da + dc, p_);
  for (int i = 0; i < da; ++i) X0.at(i, i) = 1;
  for (int i = 0; i < dc; ++i) Y0.at(i, da + i) = 1;
  return Conflation{from_matrix(d.A, D.obj, *Pinv * X0), from_matrix(D.obj, d.C, Y0 * D.P), d};
}

Vec Model::class_of(const Conflation& c) const {
  Mat X = matrix(c.x), Y = matrix(c.y);
  int dc = dim(c.C());
  std::vector<Vec> sec;
  for (int j = 0; j < dc; ++j) {
    auto s = Y.solve(unit(dc, j));
    if (!s) throw DataError("deflation is not surjective");
    sec.push_back(*s);
  }
  Mat S = Mat::from_cols(dim(c.B()), sec, p_);
  Mat D = nilpotent(c.B()) * S - S * nilpotent(c.C());
  std::vector<Vec> th;
  for (int j = 0; j < dc; ++j) {
    auto v = X.solve(D.col(j));
    if (!v) throw DataError("sequence is not exact in the middle");
    th.push_back(*v);
  }
  return class_coords(c.C(), c.A(), Mat::from_cols(dim(c.A()), th, p_));
}

void attach(ETCat& et, std::shared_ptr<const Model> m) {
  et.s.set_model([m](const ExtElem& d) { return m->realize(d); }, "nakayama " + std::to_string(m->n()));
}

}  // namespace extricat::nakayama
