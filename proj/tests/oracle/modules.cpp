#include "oracle/modules.hpp"

#include <stdexcept>

namespace oracle_t {

using namespace extricat;

std::vector<int> syzygy(int len, int n, Elem p) {
  Mat pi(len, n, p);
  for (int j = 0; j < len; ++j) pi.at(j, j) = 1;
  Mat K = pi.kernel();
  Mat N = oracle::nilpotent({n}, p);
  std::vector<Vec> cols;
  for (int j = 0; j < K.cols(); ++j) {
    auto c = K.solve(N * K.col(j));
    if (!c) throw std::logic_error("kernel is not a submodule");
    cols.push_back(*c);
  }
  if (cols.empty()) return {};
  return oracle::jordan_type(Mat::from_cols(K.cols(), cols, p));
}

std::vector<int> cosyzygy(int len, int n, Elem p) {
  // M_len sits in M_n as the bottom len basis vectors; the quotient keeps the top n - len
  int q = n - len;
  if (q == 0) return {};
  Mat N = oracle::nilpotent({n}, p);
  Mat Nq(q, q, p);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) Nq.at(i, j) = N.at(i, j);
  return oracle::jordan_type(Nq);
}

}  // namespace oracle_t
