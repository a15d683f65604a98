#include "extricat/extri/relative.hpp"

#include "extricat/exactcat/linsys.hpp"

namespace extricat {

RelExt::RelExt(const ETCat& et, Kind kind, Subcat D) : et_(&et), kind_(kind), D_(std::move(D)) {
  int n = et.n();
  const Category& C = et.C;
  K_.assign(n * n, Mat());
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      int e = et.E.dim(c, a);
      Mat K(0, e, et.p());
      for (int d : D_.members()) {
        if (kind_ == Sub || kind_ == Both)
          for (int k = 0; k < C.hom(d, c); ++k) K = K.vcat(et.E.ract(d, c, k, a));
        if (kind_ == Sup || kind_ == Both)
          for (int k = 0; k < C.hom(a, d); ++k) K = K.vcat(et.E.lact(a, d, k, c));
      }
      K_[c * n + a] = K;
    }
}

std::string RelExt::name() const {
  std::string d;
  for (int i : D_.members()) d += (d.empty() ? "" : "+") + et_->C.names[i];
  if (d.empty()) d = "0";
  switch (kind_) {
    case Full: return "E";
    case Sub: return "E_{" + d + "}";
    case Sup: return "E^{" + d + "}";
    case Both: return "E^{" + d + "}_{" + d + "}";
  }
  return "E";
}

bool RelExt::contains(const ExtElem& d) const {
  if (kind_ == Full) return true;
  const ExtStructure& E = et_->E;
  for (int t = 0; t < d.A.size(); ++t)
    for (int s = 0; s < d.C.size(); ++s) {
      const Mat& K = constraints(d.C[s], d.A[t]);
      if (K.rows() && !vzero(K * E.block(d, t, s))) return false;
    }
  return true;
}

std::vector<Vec> RelExt::basis(const Obj& C, const Obj& A) const {
  const ExtStructure& E = et_->E;
  int total = E.dim(C, A);
  auto off = E.offsets(C, A);
  std::vector<Vec> out;
  for (int t = 0; t < A.size(); ++t)
    for (int s = 0; s < C.size(); ++s) {
      int k = t * C.size() + s;
      int e = off[k + 1] - off[k];
      if (!e) continue;
      Mat K = kind_ == Full ? Mat(0, e, et_->p()) : constraints(C[s], A[t]);
      Mat ker = K.rows() ? K.kernel() : Mat::identity(e, et_->p());
      for (int j = 0; j < ker.cols(); ++j) {
        Vec v(total, 0);
        for (int r = 0; r < e; ++r) v[off[k] + r] = ker.at(r, j);
        out.push_back(std::move(v));
      }
    }
  return out;
}

void RelExt::for_each(const Obj& C, const Obj& A, const std::function<bool(const ExtElem&)>& f) const {
  LinSys::Sol sol{Vec(et_->E.dim(C, A), 0), basis(C, A)};
  for_each_solution(sol, et_->p(), name() + "(" + et_->C.name(C) + "," + et_->C.name(A) + ")",
                    [&](const Vec& v) { return f(ExtElem{C, A, v}); });
}

}  // namespace extricat
