#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extricat/extri/et.hpp"

namespace extricat {

struct EtOptions {
  int bound = 3;      // conflations delta in E(C, A) with |C| + |A| <= bound
  int et4_side = 2;   // the extra end of the second conflation in ET4 has at most this many summands
};

// every element of E(C, A) with C, A nonzero and |C| + |A| <= bound, realized
std::vector<Conflation> universe_conflations(const ETCat& et, int bound);

// the two long exact sequences of a conflation against every indecomposable
Report check_exactness(const ETCat& et, const Conflation& c);

// ET4 for s(delta) = (A -f-> B -f'-> C), s(eps) = (B -g-> D -g'-> F)
struct Et4Witness {
  Conflation eps2;   // s(f' eps) = (C -d-> E -e-> F)
  ExtElem dd;        // delta'' in E(E, A)
  Conflation sdd;    // s(delta'') as stored
  Mor psi;           // D -> middle of s(delta''), invertible
  Mor h2;            // D -> E, the deflation matched to s(delta'')
};
std::optional<Et4Witness> et4_fill(const ETCat& et, const Conflation& d, const Conflation& e, std::string* why = nullptr);

// ET4op for s(delta) = (C -x'-> Y -x-> X), s(eps) = (D -y'-> Z -y-> Y)
struct Et4opWitness {
  Conflation eps2;   // s(eps x') = (D -d-> E -c-> C)
  ExtElem dd;        // delta'' in E(X, E)
  Conflation sdd;    // s(delta'') as stored
  Mor phi;           // middle of s(delta'') -> Z, invertible
};
std::optional<Et4opWitness> et4op_fill(const ETCat& et, const Conflation& d, const Conflation& e,
                                        std::string* why = nullptr);

// ET1, ET2 (zero, additivity, realization of morphisms), ET3, ET3op, ET4, ET4op, exactness
std::vector<Report> validate_et(const ETCat& et, const EtOptions& opt = {});


}  // namespace extricat
