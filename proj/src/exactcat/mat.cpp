#include "extricat/exactcat/mat.hpp"

#include <cstdlib>
#include <sstream>

#include "extricat/exactcat/errors.hpp"

namespace extricat {

namespace {
std::uint64_t g_cap = 0;
}

std::uint64_t enum_cap() {
  if (g_cap == 0) {
    g_cap = 1u << 16;
    if (const char* env = std::getenv("EXTRICAT_CAP")) {
      char* end = nullptr;
      auto v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) g_cap = v;
    }
  }
  return g_cap;
}

void set_enum_cap(std::uint64_t cap) { g_cap = cap; }

std::uint64_t guarded_count(std::uint32_t p, int dim, const std::string& what) {
  std::uint64_t n = 1, cap = enum_cap();
  for (int i = 0; i < dim; ++i) {
    n *= p;
    if (n > cap)
      throw CapExceeded("enumeration of " + what + " (" + std::to_string(p) + "^" + std::to_string(dim) +
                        " elements) exceeds cap " + std::to_string(cap));
  }
  return n;
}

Elem finv(Elem a, Elem p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    auto q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

bool is_prime(Elem p) {
  if (p < 2) return false;
  for (Elem d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Mat Mat::identity(int n, Elem p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Mat Mat::from_cols(int rows, const std::vector<Vec>& cols, Elem p) {
  Mat m(rows, static_cast<int>(cols.size()), p);
  for (int c = 0; c < m.c_; ++c)
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  return m;
}

Vec Mat::col(int c) const {
  Vec v(r_);
  for (int r = 0; r < r_; ++r) v[r] = at(r, c);
  return v;
}

Vec Mat::row(int r) const { return Vec(d_.begin() + static_cast<long>(r) * c_, d_.begin() + static_cast<long>(r + 1) * c_); }

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw DomainError("matrix product shape mismatch");
  Mat m(r_, o.c_, p_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      Elem a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) = fadd(m.at(i, j), fmul(a, o.at(k, j), p_), p_);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw DomainError("matrix-vector shape mismatch");
  Vec out(r_, 0);
  for (int i = 0; i < r_; ++i) {
    std::uint64_t s = 0;
    for (int k = 0; k < c_; ++k) s += static_cast<std::uint64_t>(at(i, k)) * v[k];
    out[i] = static_cast<Elem>(s % p_);
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix sum shape mismatch");
  Mat m = *this;
  for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = fadd(d_[i], o.d_[i], p_);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix difference shape mismatch");
  Mat m = *this;
  for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = fsub(d_[i], o.d_[i], p_);
  return m;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& e : m.d_) e = fneg(e, p_);
  return m;
}

Mat Mat::scaled(Elem s) const {
  Mat m = *this;
  for (auto& e : m.d_) e = fmul(e, s % p_, p_);
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::hcat(const Mat& o) const {
  if (r_ != o.r_) throw DomainError("hcat row mismatch");
  Mat m(r_, c_ + o.c_, p_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

Mat Mat::vcat(const Mat& o) const {
  if (c_ != o.c_) throw DomainError("vcat column mismatch");
  Mat m(r_ + o.r_, c_, p_);
  std::copy(d_.begin(), d_.end(), m.d_.begin());
  std::copy(o.d_.begin(), o.d_.end(), m.d_.begin() + static_cast<long>(d_.size()));
  return m;
}

bool Mat::is_zero() const {
  for (auto e : d_)
    if (e) return false;
  return true;
}

Rref Mat::rref() const {
  Rref out{*this, {}};
  Mat& R = out.R;
  int row = 0;
  for (int c = 0; c < c_ && row < r_; ++c) {
    int piv = -1;
    for (int r = row; r < r_; ++r)
      if (R.at(r, c)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < c_; ++j) std::swap(R.at(piv, j), R.at(row, j));
    Elem inv = finv(R.at(row, c), p_);
    for (int j = c; j < c_; ++j) R.at(row, j) = fmul(R.at(row, j), inv, p_);
    for (int r = 0; r < r_; ++r) {
      if (r == row) continue;
      Elem f = R.at(r, c);
      if (!f) continue;
      for (int j = c; j < c_; ++j) R.at(r, j) = fsub(R.at(r, j), fmul(f, R.at(row, j), p_), p_);
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

int Mat::rank() const { return static_cast<int>(rref().pivots.size()); }

Mat Mat::kernel() const {
  auto [R, piv] = rref();
  std::vector<char> is_piv(c_, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < c_; ++f) {
    if (is_piv[f]) continue;
    Vec v(c_, 0);
    v[f] = 1 % p_;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = fneg(R.at(static_cast<int>(i), f), p_);
    basis.push_back(std::move(v));
  }
  return from_cols(c_, basis, p_);
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != r_) throw DomainError("solve: rhs length mismatch");
  Mat aug = hcat(from_cols(r_, {b}, p_));
  auto [R, piv] = aug.rref();
  if (!piv.empty() && piv.back() == c_) return std::nullopt;
  Vec x(c_, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R.at(static_cast<int>(i), c_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) return std::nullopt;
  Mat aug = hcat(identity(r_, p_));
  auto [R, piv] = aug.rref();
  if (static_cast<int>(piv.size()) < r_ || (r_ > 0 && piv[r_ - 1] >= r_)) return std::nullopt;
  Mat inv(r_, r_, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) inv.at(i, j) = R.at(i, r_ + j);
  return inv;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

Mat matrix_of(int in, int out, Elem p, const std::function<Vec(const Vec&)>& f) {
  Mat m(out, in, p);
  for (int k = 0; k < in; ++k) {
    Vec v = f(unit(in, k));
    if (static_cast<int>(v.size()) != out) throw DomainError("matrix_of: image length mismatch");
    for (int r = 0; r < out; ++r) m.at(r, k) = v[r];
  }
  return m;
}

Vec vadd(const Vec& a, const Vec& b, Elem p) {
  if (a.size() != b.size()) throw DomainError("vector sum length mismatch");
  Vec o(a.size());
  for (size_t i = 0; i < a.size(); ++i) o[i] = fadd(a[i], b[i], p);
  return o;
}

Vec vsub(const Vec& a, const Vec& b, Elem p) {
  if (a.size() != b.size()) throw DomainError("vector difference length mismatch");
  Vec o(a.size());
  for (size_t i = 0; i < a.size(); ++i) o[i] = fsub(a[i], b[i], p);
  return o;
}

Vec vscale(const Vec& a, Elem s, Elem p) {
  Vec o(a.size());
  for (size_t i = 0; i < a.size(); ++i) o[i] = fmul(a[i], s, p);
  return o;
}

bool vzero(const Vec& a) {
  for (auto e : a)
    if (e) return false;
  return true;
}

Vec unit(int n, int k) {
  Vec v(n, 0);
  v[k] = 1;
  return v;
}

Span::Span(int d, Elem pp, const std::vector<Vec>& gens) : dim(d), p(pp) {
  Mat m(static_cast<int>(gens.size()), d, pp);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < d; ++j) m.at(static_cast<int>(i), j) = gens[i][j];
  auto rr = m.rref();
  R = Mat(static_cast<int>(rr.pivots.size()), d, pp);
  for (int i = 0; i < R.rows(); ++i)
    for (int j = 0; j < d; ++j) R.at(i, j) = rr.R.at(i, j);
  pivots = rr.pivots;
}

Vec Span::reduce(const Vec& v) const {
  Vec w = v;
  for (size_t i = 0; i < pivots.size(); ++i) {
    Elem f = w[pivots[i]];
    if (!f) continue;
    for (int j = 0; j < dim; ++j) w[j] = fsub(w[j], fmul(f, R.at(static_cast<int>(i), j), p), p);
  }
  return w;
}

bool Span::contains(const Vec& v) const { return vzero(reduce(v)); }

void for_each_vector(int dim, Elem p, const std::string& what, const std::function<bool(const Vec&)>& f) {
  guarded_count(p, dim, what);
  Vec v(dim, 0);
  while (true) {
    if (!f(v)) return;
    int i = dim - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace extricat
