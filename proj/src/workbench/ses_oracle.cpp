#include "extricat/workbench/ses_oracle.hpp"

#include <algorithm>
#include <functional>

#include "extricat/exactcat/errors.hpp"

namespace extricat::oracle {

namespace {

int total(const std::vector<int>& v) {
  int d = 0;
  for (int l : v) d += l;
  return d;
}

Mat pow(const Mat& N, int k) {
  Mat P = Mat::identity(N.rows(), N.p());
  for (int i = 0; i < k; ++i) P = P * N;
  return P;
}

void partitions(int left, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    std::vector<int> v = cur;
    std::sort(v.begin(), v.end());
    out.push_back(v);
    return;
  }
  for (int l = std::min(left, maxpart); l >= 1; --l) {
    cur.push_back(l);
    partitions(left - l, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Mat nilpotent(const std::vector<int>& lens, Elem p) {
  int d = total(lens);
  Mat N(d, d, p);
  int off = 0;
  for (int l : lens) {
    for (int j = 0; j + 1 < l; ++j) N.at(off + j + 1, off + j) = 1;
    off += l;
  }
  return N;
}

std::vector<Mat> module_maps(const std::vector<int>& A, const std::vector<int>& B, Elem p) {
  Mat NB = nilpotent(B, p);
  int da = total(A), db = total(B);
  // candidate generator images per summand of A: v with x^len v = 0
  std::vector<std::vector<Vec>> cands;
  for (int l : A) {
    Mat K = pow(NB, l);
    std::vector<Vec> c;
    for_each_vector(db, p, "module vectors", [&](const Vec& v) {
      if (vzero(K * v)) c.push_back(v);
      return true;
    });
    cands.push_back(std::move(c));
  }
  std::uint64_t count = 1;
  for (auto& c : cands) {
    count *= c.size();
    if (count > enum_cap()) throw CapExceeded("module map enumeration exceeds cap " + std::to_string(enum_cap()));
  }
  std::vector<Mat> out;
  std::vector<size_t> pick(A.size(), 0);
  while (true) {
    Mat F(db, da, p);
    int off = 0;
    for (size_t s = 0; s < A.size(); ++s) {
      Vec v = cands[s][pick[s]];
      for (int j = 0; j < A[s]; ++j) {
        for (int r = 0; r < db; ++r) F.at(r, off + j) = v[r];
        v = NB * v;
      }
      off += A[s];
    }
    out.push_back(std::move(F));
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

std::vector<int> jordan_type(const Mat& N) {
  int d = N.rows();
  std::vector<int> r{d};
  Mat P = Mat::identity(d, N.p());
  while (r.back() > 0) {
    P = P * N;
    r.push_back(P.rank());
    if (r.size() > static_cast<size_t>(d) + 2) throw DataError("matrix is not nilpotent");
  }
  // blocks of length >= k: r[k-1] - r[k]
  std::vector<int> out;
  for (size_t k = 1; k < r.size(); ++k) {
    int ge = r[k - 1] - r[k];
    int ge_next = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (int i = 0; i < ge - ge_next; ++i) out.push_back(static_cast<int>(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool exact_modules(const Mat& NA, const Mat& NB, const Mat& NC, const Mat& X, const Mat& Y) {
  if (!(NB * X == X * NA) || !(NC * Y == Y * NB)) return false;
  if (!(Y * X).is_zero()) return false;
  return X.rank() == NA.rows() && Y.rank() == NC.rows() && NA.rows() + NC.rows() == NB.rows();
}

SesCount ses_classes(const std::vector<int>& C, const std::vector<int>& A, int n, Elem p) {
  SesCount out;
  std::uint64_t homCA = module_maps(C, A, p).size();
  std::vector<std::vector<int>> mids;
  std::vector<int> cur;
  partitions(total(A) + total(C), n, cur, mids);
  Mat NA = nilpotent(A, p), NC = nilpotent(C, p);
  // rank of x^k on a module: sum over blocks of max(0, len - k)
  auto rk = [](const std::vector<int>& v, int k) {
    int r = 0;
    for (int l : v) r += std::max(0, l - k);
    return r;
  };
  for (auto& B : mids) {
    // kernels of x^k are left exact, so rank x^k on B is at least the sum; images are bounded by
    // the image on one end plus the whole other end
    bool possible = true;
    for (int k = 1; k < n; ++k) {
      int b = rk(B, k), a = rk(A, k), c = rk(C, k);
      if (b < a + c || b > std::min(a + total(C), c + total(A))) possible = false;
    }
    if (!possible) continue;
    Mat NB = nilpotent(B, p);
    auto xs = module_maps(A, B, p);
    auto ys = module_maps(B, C, p);
    std::uint64_t pairs = 0;
    for (auto& X : xs) {
      if (X.rank() != NA.rows()) continue;
      for (auto& Y : ys)
        if (exact_modules(NA, NB, NC, X, Y)) ++pairs;
    }
    if (!pairs) continue;
    // End B modulo its radical is a product of matrix rings over the block multiplicities,
    // so |Aut B| = |End B| * prod |GL_m(p)| / p^(m^2). dim End B from the intertwiner kernel.
    int db = NB.rows();
    Mat comm = matrix_of(db * db, db * db, p, [&](const Vec& v) {
      Mat X(db, db, p);
      for (int i = 0; i < db * db; ++i) X.at(i / db, i % db) = v[i];
      return (NB * X - X * NB).data();
    });
    int endim = db * db - comm.rank();
    std::map<int, int> mult;
    for (int l : B) ++mult[l];
    std::uint64_t aut = 1;
    int expo = endim;
    for (auto [l, m] : mult) {
      expo -= m * m;
      std::uint64_t pm = 1;
      for (int i = 0; i < m; ++i) pm *= p;
      std::uint64_t pi = 1;
      for (int i = 0; i < m; ++i) {
        aut *= pm - pi;
        pi *= p;
      }
    }
    for (int i = 0; i < expo; ++i) aut *= p;
    std::uint64_t num = pairs * homCA;
    if (num % aut) throw DataError("SES count is not divisible by |Aut B|");
    out.middle[B] = num / aut;
    out.classes += num / aut;
  }
  return out;
}

}  // namespace extricat::oracle
