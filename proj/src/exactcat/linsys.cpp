#include "extricat/exactcat/linsys.hpp"

#include "extricat/exactcat/errors.hpp"

#include <random>

namespace extricat {

int LinSys::var(int dim) {
  off_.push_back(total_);
  dim_.push_back(dim);
  total_ += dim;
  return static_cast<int>(dim_.size()) - 1;
}

void LinSys::eq(const std::vector<std::pair<int, Mat>>& terms, const Vec& rhs) {
  for (auto& [v, M] : terms)
    if (M.cols() != dim_.at(v) || M.rows() != static_cast<int>(rhs.size()))
      throw DomainError("LinSys::eq: block shape " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) +
                        " does not fit unknown of dim " + std::to_string(dim_.at(v)) + " and rhs " +
                        std::to_string(rhs.size()));
  eqs_.push_back({terms, rhs});
}

Mat LinSys::matrix() const {
  int rows = 0;
  for (auto& e : eqs_) rows += static_cast<int>(e.second.size());
  Mat A(rows, total_, p_);
  int r0 = 0;
  for (auto& [terms, rhs] : eqs_) {
    for (auto& [v, M] : terms)
      for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) A.at(r0 + i, off_[v] + j) = fadd(A.at(r0 + i, off_[v] + j), M.at(i, j), p_);
    r0 += static_cast<int>(rhs.size());
  }
  return A;
}

std::optional<LinSys::Sol> LinSys::solve() const {
  Mat A = matrix();
  Vec b;
  for (auto& e : eqs_) b.insert(b.end(), e.second.begin(), e.second.end());
  auto x = A.solve(b);
  if (!x) return std::nullopt;
  Sol s{*x, {}};
  Mat K = A.kernel();
  for (int c = 0; c < K.cols(); ++c) s.ker.push_back(K.col(c));
  return s;
}

Vec LinSys::get(const Vec& x, int v) const {
  return Vec(x.begin() + off_.at(v), x.begin() + off_.at(v) + dim_.at(v));
}

void for_each_solution(const LinSys::Sol& s, Elem p, const std::string& what, const std::function<bool(const Vec&)>& f) {
  int k = static_cast<int>(s.ker.size());
  for_each_vector(k, p, what, [&](const Vec& coef) {
    Vec x = s.x0;
    for (int i = 0; i < k; ++i)
      if (coef[i])
        for (size_t j = 0; j < x.size(); ++j) x[j] = fadd(x[j], fmul(coef[i], s.ker[i][j], p), p);
    return f(x);
  });
}

std::optional<Vec> search_solution(const LinSys::Sol& s, Elem p, const std::string& what,
                                   const std::function<bool(const Vec&)>& pred) {
  int k = static_cast<int>(s.ker.size());
  std::optional<Vec> hit;
  auto combo = [&](const Vec& coef) {
    Vec x = s.x0;
    for (int i = 0; i < k; ++i)
      if (coef[i])
        for (size_t j = 0; j < x.size(); ++j) x[j] = fadd(x[j], fmul(coef[i], s.ker[i][j], p), p);
    return x;
  };
  std::uint64_t size = 1;
  bool small = true;
  for (int i = 0; i < k && small; ++i) {
    size *= p;
    if (size > enum_cap()) small = false;
  }
  if (small) {
    for_each_solution(s, p, what, [&](const Vec& x) {
      if (pred(x)) hit = x;
      return !hit;
    });
    return hit;
  }
  Vec coef(k, 0);
  if (pred(s.x0)) return s.x0;
  for (int i = 0; i < k; ++i)
    for (Elem a = 1; a < p; ++a) {
      coef.assign(k, 0);
      coef[i] = a;
      if (Vec x = combo(coef); pred(x)) return x;
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (Elem a = 1; a < p; ++a)
        for (Elem b = 1; b < p; ++b) {
          coef.assign(k, 0);
          coef[i] = a, coef[j] = b;
          if (Vec x = combo(coef); pred(x)) return x;
        }
  std::mt19937 rng(0);
  std::uniform_int_distribution<Elem> dist(0, p - 1);
  for (int t = 0; t < 4096; ++t) {
    for (auto& c : coef) c = dist(rng);
    if (Vec x = combo(coef); pred(x)) return x;
  }
  throw CapExceeded("search over " + what + " (" + std::to_string(p) + "^" + std::to_string(k) +
                    " elements) found nothing in its sample and exceeds cap " + std::to_string(enum_cap()));
}

}  // namespace extricat
