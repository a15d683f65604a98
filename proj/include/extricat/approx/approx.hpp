#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extricat/extri/calculus.hpp"

namespace extricat {

// C(D, a) surjective for every indecomposable D-object
bool is_D_epic(const Category& C, const Mor& a, const Subcat& D);
// C(a, D) surjective
bool is_D_monic(const Category& C, const Mor& a, const Subcat& D);

// Canonical evaluation map from a sum of D-objects, pruned greedily while it stays D-epic.
Mor right_approximation(const Category& C, const Obj& X, const Subcat& D);
Mor left_approximation(const Category& C, const Obj& X, const Subcat& D);

// left: X -i-> I^X -p-> X<1> with delta = lambda^X;  right: X<-1> -i-> I_X -p-> X with lambda_X
struct ApproxTriangle {
  bool left = true;
  Obj X;
  Conflation tri;
  const Obj& I() const { return tri.B(); }
  const Obj& shifted() const { return left ? tri.C() : tri.A(); }
};

struct ApproxChoice {
  Report report;
  std::vector<std::optional<ApproxTriangle>> tri;  // per indecomposable of `inside`
};

// Search order over candidate conflations: canonical, or shuffled by mt19937(seed) when seed > 0.
ApproxChoice strongly_cov_finite(const RelExt& E, const Subcat& I, const Subcat& inside, int scan = kScanBound,
                                 std::uint32_t seed = 0);
ApproxChoice strongly_contra_finite(const RelExt& E, const Subcat& I, const Subcat& inside, int scan = kScanBound,
                                    std::uint32_t seed = 0);

// Direct sum of frozen indecomposable triangles for a composite object
ApproxTriangle sum_triangle(const ETCat& et, const std::vector<std::optional<ApproxTriangle>>& tri, const Obj& X,
                            bool left);

struct FrobeniusVerdict {
  Report report;
  ApproxChoice cov, contra;
};
// strongly functorially finite and E^I = E_I
FrobeniusVerdict is_relative_frobenius(const ETCat& et, const Subcat& I, int scan = kScanBound);

// Over every realized conflation up to `bound` and every D: delta in E_D iff y is D-epic,
// delta in E^D iff x is D-monic. The witness of a failure carries the mismatch count.
Report relative_vs_approx(const ETCat& et, int bound = 3);

}  // namespace extricat
