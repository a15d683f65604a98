#pragma once

#include <optional>
#include <vector>

#include "extricat/extri/relative.hpp"

namespace extricat {

// Default multiplicity bound for subcategory scans.
constexpr int kScanBound = 2;

// Indecomposable summands of third terms C of E'-conflations A -> B -> C with A in X, B in Y.
// A conflation is recorded in `wit` for each new member when wit is given.
Subcat cone_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan = kScanBound,
                std::vector<Conflation>* wit = nullptr);
// first terms A of E'-conflations A -> B -> C with B in X, C in Y
Subcat cocone_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan = kScanBound,
                  std::vector<Conflation>* wit = nullptr);
// middle terms of E'-conflations with ends in X and Y
Subcat star_set(const RelExt& E, const Subcat& X, const Subcat& Y, int scan = kScanBound,
                std::vector<Conflation>* wit = nullptr);

// is D closed under E'-extensions: A, C in D and delta in E'(C, A) force the middle into D
std::optional<Conflation> extension_closure_violation(const RelExt& E, const Subcat& D, int scan = kScanBound);

// termwise direct sum of s-triangles; the class is the block-diagonal sum
Conflation sum_conflations(const ETCat& et, const std::vector<const Conflation*>& parts);

Subcat projectives(const RelExt& E);
Subcat injectives(const RelExt& E);
// for each indecomposable X a conflation X' -> P -> X with P projective (scan over X')
std::optional<int> lacks_enough_projectives(const RelExt& E, int scan = kScanBound);
std::optional<int> lacks_enough_injectives(const RelExt& E, int scan = kScanBound);

// X -[f; x]-> X' + E -[-x' g]-> E' with class delta y', from s(delta) = (X -x-> E -y-> Y)
// and s(f delta) = (X' -x'-> E' -y'-> Y).
struct InflationFrom {
  Conflation conf;
  Conflation fdelta;  // s(f delta)
  Mor g;              // E -> E'
  Sum mid;            // X' + E
};
InflationFrom inflation_from(const ETCat& et, const Mor& f, const Conflation& c);

// dual: E' -[y'; -g]-> C' + B -[f y]-> C with class -x' delta, from s(delta) = (A -x-> B -y-> C)
// and s(delta f) = (A -x'-> E' -y'-> C').
struct DeflationTo {
  Conflation conf;
  Conflation deltaf;  // s(delta f)
  Mor g;              // E' -> B
  Sum mid;            // C' + B
};
DeflationTo deflation_to(const ETCat& et, const Mor& f, const Conflation& c);

// s-triangles X2 -v1-> W -w1-> Y1 and X1 -v2-> W -w2-> Y2 for s(delta_i) = (X_i -> Y_i -> Z)
struct ShiftedOctahedron {
  Conflation t1, t2;  // the new conflations, sharing W
};
std::optional<ShiftedOctahedron> shifted_octahedron(const ETCat& et, const Conflation& a, const Conflation& b);

}  // namespace extricat
