#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace extricat {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

// Arithmetic in F_p. p is small (the enumeration cap keeps it so), products fit in 64 bits.
inline Elem fadd(Elem a, Elem b, Elem p) { Elem s = a + b; return s >= p ? s - p : s; }
inline Elem fsub(Elem a, Elem b, Elem p) { return a >= b ? a - b : a + p - b; }
inline Elem fneg(Elem a, Elem p) { return a == 0 ? 0 : p - a; }
inline Elem fmul(Elem a, Elem b, Elem p) {
  return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
}
Elem finv(Elem a, Elem p);
bool is_prime(Elem p);

struct Rref;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, Elem p) : r_(rows), c_(cols), p_(p), d_(static_cast<size_t>(rows) * cols, 0) {}
  static Mat identity(int n, Elem p);
  // columns given as vectors of length rows
  static Mat from_cols(int rows, const std::vector<Vec>& cols, Elem p);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Elem p() const { return p_; }
  Elem& at(int r, int c) { return d_[static_cast<size_t>(r) * c_ + c]; }
  Elem at(int r, int c) const { return d_[static_cast<size_t>(r) * c_ + c]; }
  const std::vector<Elem>& data() const { return d_; }

  Vec col(int c) const;
  Vec row(int r) const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Elem s) const;
  bool operator==(const Mat& o) const = default;
  Mat transpose() const;
  Mat hcat(const Mat& o) const;
  Mat vcat(const Mat& o) const;
  bool is_zero() const;

  struct Rref rref() const;
  int rank() const;
  // columns form a basis of the null space, in rref free-variable order
  Mat kernel() const;
  // some x with (*this) x = b, or nullopt
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<Mat> inverse() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  Elem p_ = 2;
  std::vector<Elem> d_;
};

struct Rref {
  Mat R;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Matrix of a linear map given by its action on coordinate vectors.
Mat matrix_of(int in, int out, Elem p, const std::function<Vec(const Vec&)>& f);

Vec vadd(const Vec& a, const Vec& b, Elem p);
Vec vsub(const Vec& a, const Vec& b, Elem p);
Vec vscale(const Vec& a, Elem s, Elem p);
bool vzero(const Vec& a);
Vec unit(int n, int k);

// Basis of the span of the given vectors (rows of an rref), and membership.
struct Span {
  int dim;
  Elem p;
  Mat R;  // rref rows
  std::vector<int> pivots;
  Span(int dim, Elem p, const std::vector<Vec>& gens);
  int rank() const { return static_cast<int>(pivots.size()); }
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;  // eliminate pivot coordinates
};

// Lexicographic enumeration of all vectors of F_p^dim, guarded by the cap.
void for_each_vector(int dim, Elem p, const std::string& what, const std::function<bool(const Vec&)>& f);

}  // namespace extricat
