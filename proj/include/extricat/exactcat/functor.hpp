#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "extricat/exactcat/quotient.hpp"
#include "extricat/exactcat/report.hpp"

namespace extricat {

// Additive functor between quotient categories, given on indecomposables of `domain`.
// mor[(i,j)] maps base coordinates of Hom(i,j) to base coordinates of Hom(F i, F j).
struct FunctorData {
  std::string name;
  const Quotient* src = nullptr;
  const Quotient* dst = nullptr;
  Subcat domain;
  std::vector<Obj> obj;
  std::map<std::pair<int, int>, Mat> mor;

  Obj on(const Obj& X) const;
  Mor on(const Mor& f) const;
};

FunctorData identity_functor(const Quotient& Q, const Subcat& domain, const std::string& name = "Id");
// G after F; F must land in G's domain
FunctorData compose_functors(const FunctorData& G, const FunctorData& F, const std::string& name);

struct NatTransData {
  std::string name;
  const FunctorData* F = nullptr;
  const FunctorData* G = nullptr;
  std::vector<Mor> comp;  // indexed by indecomposable; F(i) -> G(i)
  Mor at(const Obj& X) const;
};

Report check_functor(const FunctorData& F);
Report check_natural(const NatTransData& eta, bool require_iso);

}  // namespace extricat
