#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extricat/exactcat/mat.hpp"

namespace extricat {

// Linear system over F_p in several unknown blocks: sum_k M_k x_{v_k} = rhs.
class LinSys {
 public:
  explicit LinSys(Elem p) : p_(p) {}
  int var(int dim);
  void eq(const std::vector<std::pair<int, Mat>>& terms, const Vec& rhs);

  struct Sol {
    Vec x0;
    std::vector<Vec> ker;  // basis of the homogeneous solutions
  };
  std::optional<Sol> solve() const;
  // the homogeneous system's matrix
  Mat matrix() const;
  Vec get(const Vec& x, int v) const;
  int width() const { return total_; }

 private:
  Elem p_;
  std::vector<int> off_, dim_;
  int total_ = 0;
  std::vector<std::pair<std::vector<std::pair<int, Mat>>, Vec>> eqs_;
};

// Visit x0 + span(ker) element by element; guarded by the cap. f returns false to stop.
void for_each_solution(const LinSys::Sol& s, Elem p, const std::string& what, const std::function<bool(const Vec&)>& f);

// Find an element of x0 + span(ker) with pred. Exhaustive when the space fits the cap;
// otherwise low-weight combinations first, then a fixed-seed random sample, and a
// CapExceeded refusal if all of that misses.
std::optional<Vec> search_solution(const LinSys::Sol& s, Elem p, const std::string& what,
                                   const std::function<bool(const Vec&)>& pred);

}  // namespace extricat
