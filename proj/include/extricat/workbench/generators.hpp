#pragma once

#include <memory>
#include <optional>

#include "extricat/triangles/triangles.hpp"
#include "extricat/workbench/catfile.hpp"
#include "extricat/workbench/nakayama.hpp"

namespace extricat::workbench {

constexpr int kTableBound = 3;

// Module category of F_p[x]/(x^n) with P = {M_n} declared. The tables are accepted only
// after the brute-force SES enumeration agrees with them; otherwise DataError.
Workspace gen_nakayama(int n, Elem p, int table_bound = kTableBound);
// Ext dims, middle-term distributions and exactness of every stored record against the oracle
Report nakayama_oracle_check(const nakayama::Model& m, const ETCat& et, int bound);

// Stable category of the same algebra, written as a triangulated input: shift = cosyzygy,
// triangles from the module sequences pulled back along the injective hull.
class StableNakayama {
 public:
  StableNakayama(int n, Elem p);
  const Category& category() const { return stable_; }
  const Triangulated& shift() const { return tri_; }  // shift data, no triangles
  // A -> B -> C -z-> A[1] for z in Hom(C, A[1])
  DeclaredTriangle triangle(const Obj& C, const Obj& A, const Mor& z) const;

 private:
  std::shared_ptr<nakayama::Model> m_;
  std::unique_ptr<ETCat> mod_;
  std::unique_ptr<Quotient> Q_;
  Category stable_;
  Triangulated tri_;
  int n_;
  Mor hull(int i) const;   // M_i -> M_n
  Mor cohull(int i) const; // M_n -> M_i[1]
};
Workspace gen_stable_nakayama(int n, Elem p, int table_bound = kTableBound);

// Resolve the model line of a parsed file: attach it as a fallback and cross-check the tables.
void attach_model(Workspace& W);

// (∅, C, ∅) on a triangulated input, with E(C, A) = Hom(C, A[1]) and s read off the triangle table.
struct ShiftedTriple {
  std::unique_ptr<ETCat> et;
  Subcat S, Z, V;
  Triangulated tri;
};
ShiftedTriple gen_shifted_triple(const Workspace& W);

// Sigma against the declared shift: mu_X = lambda^X o (h^{X<1>})^{-1} must be a natural iso Sigma => [1].
struct ShiftAgreement {
  Report report;
  FunctorData shift;
  std::optional<NatTransData> mu;  // points at the functors; keep the verdict in place
  ShiftAgreement() = default;
  ShiftAgreement(const ShiftAgreement&) = delete;
  ShiftAgreement& operator=(const ShiftAgreement&) = delete;
};
std::unique_ptr<ShiftAgreement> shift_agreement(const Mutation& M, const MutationFunctors& F, const ShiftedTriple& T);
// every generated right triangle is isomorphic to a declared one and every declared one lies in nabla
Report declared_triangles_agree(const Mutation& M, const TriangleFamily& nabla, const ShiftedTriple& T,
                                const NatTransData& mu);

// Rigid D-mutation pair (X, Y) in a shifted triple: D rigid, D ⊂ X ⊂ D[-1]^perp, Y = X<1>.
struct RigidPairVerdict {
  Report report;
  Subcat Xshift;  // Cone_{E^D}(X, D) together with D
  Subcat Z;       // X ∩ Y, giving the triple (D, Z, D)
};
RigidPairVerdict check_rigid_pair(const ETCat& et, const Subcat& D, const Subcat& X, const Subcat& Y);

}  // namespace extricat::workbench
