#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "extricat/approx/approx.hpp"
#include "extricat/exactcat/functor.hpp"

namespace extricat {

struct MutationOptions {
  int scan = kScanBound;
  std::uint32_t seed = 0;      // search order of every frozen triangle; 0 keeps the canonical order
  bool flip_phi_sign = false;  // drop the minus sign in Phi (negative tests only)
};

// A subcategory triple (S, Z, V) with I = S ∩ Z, its condition verdicts, and the functors
// <1>, <-1>, sigma, omega, Sigma, Omega on Z/[I] built from frozen s-triangles.
class Mutation {
 public:
  Mutation(const ETCat& et, Subcat S, Subcat Z, Subcat V, MutationOptions opt = {});
  Mutation(const Mutation&) = delete;
  Mutation& operator=(const Mutation&) = delete;

  const ETCat& et() const { return et_; }
  const Category& cat() const { return et_.C; }
  const Quotient& Q() const { return *Q_; }
  const RelExt& upper() const { return *up_; }    // E^I
  const RelExt& lower() const { return *down_; }  // E_I
  const MutationOptions& options() const { return opt_; }

  Subcat S, Z, V, I, J;
  Subcat Ut, Tt;  // CoCone_{E^I}(Z, S) and Cone_{E_I}(V, Z)
  Report mt1, mt2, mt3;
  bool certified() const { return mt1.pass && mt2.pass && mt3.pass; }

  // Frozen triangles, summed over the summands of the argument.
  const Conflation& left(const Obj& X) const;       // X -i-> I^X -p-> X<1>, lambda^X     (X in Z)
  const Conflation& right(const Obj& X) const;      // X<-1> -i-> I_X -p-> X, lambda_X    (X in Z)
  const Conflation& sigma_tri(const Obj& U) const;  // U -h-> sigma U -g-> S^U, rho^U     (U in Ut)
  const Conflation& omega_tri(const Obj& T) const;  // V_T -g-> omega T -h-> T, rho_T    (T in Tt)

  Obj up(const Obj& X) const { return left(X).C(); }
  Obj down(const Obj& X) const { return right(X).A(); }
  Mor up(const Mor& x) const;
  Mor down(const Mor& x) const;
  Obj sigma(const Obj& U) const { return sigma_tri(U).B(); }
  Obj omega(const Obj& T) const { return omega_tri(T).B(); }
  Mor sigma(const Mor& u) const;
  Mor omega(const Mor& t) const;
  Obj Sigma(const Obj& X) const { return sigma(up(X)); }
  Obj Omega(const Obj& X) const { return omega(down(X)); }
  Mor Sigma(const Mor& z) const { return sigma(up(z)); }
  Mor Omega(const Mor& z) const { return omega(down(z)); }

  // z: X<1> -> Y  goes to  z': X -> Y<-1> with z' lambda^X = -lambda_Y z
  Mor Phi(const Obj& X, const Mor& z) const;
  Mor Phi_inv(const Obj& Y, const Mor& w) const;
  // Z(Sigma X, Y) -> Z(X, Omega Y) through -o h^{X<1>}, Phi and h_{Y<-1>} o -
  Mor theta(const Obj& X, const Mor& f) const;
  Mor theta_inv(const Obj& Y, const Mor& g) const;
  Mor alpha(const Obj& X) const;  // unit X -> Omega Sigma X
  Mor beta(const Obj& Y) const;   // counit Sigma Omega Y -> Y

  // checks
  Report unit_bijectivity() const;    // -o h^U and h_T o - on every Hom pair
  Report phi_report() const;          // well defined, bijective, natural in both arguments
  Report triangle_identities() const;
  Report adjunction_diagram() const;  // f' = beta Sigma(f) and f = Omega(f') alpha
  Report sigma_iso_probe() const;     // sigma inverts E^I-inflations with cokernel in S
  Report approx_in_both() const;      // frozen <1>, <-1> triangles lie in E^I ∩ E_I

 private:
  const ETCat& et_;
  MutationOptions opt_;
  std::unique_ptr<Quotient> Q_;
  std::unique_ptr<RelExt> up_, down_, full_;
  ApproxChoice lchoice_, rchoice_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Obj, Conflation> lc_, rc_, sc_, oc_;
  mutable std::map<int, std::optional<Conflation>> s1_, o1_;

  const std::optional<Conflation>& sigma1(int u) const;
  const std::optional<Conflation>& omega1(int t) const;
  void check_mt1();
  void check_mt2();
  void check_mt3();
};

// Tables of the functors on indecomposables, plus the unit and counit as natural transformations.
// Not movable: the transformations point at the functors.
struct MutationFunctors {
  FunctorData up, down, sigma, omega, Sigma, Omega, id, OmegaSigma, SigmaOmega;
  NatTransData alpha, beta;
  MutationFunctors() = default;
  MutationFunctors(const MutationFunctors&) = delete;
  MutationFunctors& operator=(const MutationFunctors&) = delete;
};
std::unique_ptr<MutationFunctors> build_functors(const Mutation& M);
// functoriality of every table and naturality of alpha, beta
Report check_functors(const MutationFunctors& F);

// A functor table from object and morphism maps on indecomposables.
FunctorData tabulate(const std::string& name, const Quotient& src, const Quotient& dst, const Subcat& domain,
                     const std::function<Obj(const Obj&)>& fo, const std::function<Mor(const Mor&)>& fm);

// Natural isomorphism between two functor tables on the same domain, searched componentwise:
// each component is any solution of the naturality equations that is invertible mod [I].
std::optional<NatTransData> find_natural_iso(const FunctorData& F, const FunctorData& G, const std::string& name);

// ---- (.)^- and (.)^+, conditions MT4 / MT4' / MT4+ ----

struct PlusMinus {
  Subcat Um, Tp;      // CoCone_{E^I}(I, S), Cone_{E_I}(V, I)
  Subcat Z1m, Zm1p;   // summands of (X<1>)^- and (X<-1>)^+ over indecomposable X in Z
  std::map<int, Conflation> minus;  // X -> (sigma(X<1>))<-1> -r-> (X<1>)^- -s-> X<1>
  std::map<int, Conflation> plus;   // X -> X<-1> -s-> (X<-1>)^+ -r-> (omega(X<-1>))<1>
  Report report;                    // vanishing of E^I(Um, Z<-1>), E_I(Z<1>, Tp), and the s_U bijections
};
PlusMinus plus_minus(const Mutation& M);

struct Mt4Verdict {
  Report mt4, mt4_prime, mt4_plus;
  Report implications;  // MT4+ => MT4 <=> MT4' on the outcomes
};
Mt4Verdict check_MT4(const Mutation& M, const PlusMinus& pm);

// Canonical representatives of the non-I members up to isomorphism in C/[I].
Subcat iso_classes(const Quotient& Q, const Subcat& D);

// Sigma Omega ≅ Id (dual = false) or Omega Sigma ≅ Id (dual = true) through the functor Psi.
struct QuasiInverse {
  bool dual = false;
  Report report;
  FunctorData Psi, id, composite;  // composite is Sigma Omega or Omega Sigma
  // psi: Id => Psi, phi: composite => Psi; dual: psi: Psi => Id, phi: Psi => composite
  NatTransData psi, phi;
  std::map<int, json> witness;     // per indecomposable: the s-triangle behind Psi(Z)
  QuasiInverse() = default;
  QuasiInverse(const QuasiInverse&) = delete;
  QuasiInverse& operator=(const QuasiInverse&) = delete;
};
std::unique_ptr<QuasiInverse> quasi_inverse(const Mutation& M, const MutationFunctors& F, bool dual);

// ---- front ends ----

// ((S, T), (U, V)) twin cotorsion pair: cotorsion axioms, S ⊆ U, concentricity; yields (S, T ∩ U, V).
struct ConcentricVerdict {
  Report report;
  Subcat S, Z, V;
};
ConcentricVerdict check_concentric_tcp(const ETCat& et, const Subcat& S, const Subcat& T, const Subcat& U,
                                       const Subcat& V, int scan = kScanBound);
Report hovey_check();  // not implemented

}  // namespace extricat
