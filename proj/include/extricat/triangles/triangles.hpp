#pragma once

#include <array>
#include <optional>
#include <vector>

#include "extricat/mutation/mutation.hpp"

namespace extricat {

// O0 -m0-> O1 -m1-> O2 -m2-> O3. Right triangles have O3 = Sigma O0, left ones O0 = Omega O3.
struct Tri4 {
  std::array<Obj, 4> O;
  std::array<Mor, 3> m;
};
json tri_json(const Category& C, const Tri4& t);

// X -[a; i^X]-> Y + I^X -b~-> C^a with class delta~, and the column Y -b-> C^a -c-> X<1> with gamma
struct RightTriangleData {
  Mor a;
  InflationFrom infl;
  Mor b, c;
  ExtElem gamma;
  Tri4 tri;        // X -a-> Y -h^C b-> sigma C^a -sigma(c)-> Sigma X
  Report diagram;  // the six squares and the column s-triangle
};
RightTriangleData build_right_triangle(const Mutation& M, const Mor& a);

// C_b -[a; -g]-> Y + I_Z -[b p_Z]-> Z with class delta^, and Z<-1> -c-> C_b -a-> Y with gamma
struct LeftTriangleData {
  Mor b;
  DeflationTo defl;
  Mor a, c;
  ExtElem gamma;
  Tri4 tri;  // Omega Z -omega(c)-> omega C_b -a h_C-> Y -b-> Z
  Report diagram;
};
LeftTriangleData build_left_triangle(const Mutation& M, const Mor& b);

// Generators: one triangle per quotient-Hom element between generator objects
// (zero and the Z-objects with at most `summands` non-I summands, no I-summands).
struct TriangleFamily {
  bool right = true;
  std::vector<Tri4> gens;
  Report built;        // construction and diagram checks
  int corrupted = -1;  // index of a deliberately broken generator
};
std::vector<Obj> generator_objects(const Mutation& M, int summands = 1);
TriangleFamily generate_family(const Mutation& M, bool right, int summands = 1);
// break one generator's last map (negated, else set to zero); returns its index or -1
int corrupt_family(TriangleFamily& fam, const Mutation& M);

// iso (id, id, z) onto the canonical triangle of the first map (right), or (x, id, id) (left)
std::optional<Mor> member_right(const Mutation& M, const Tri4& t);
std::optional<Mor> member_left(const Mutation& M, const Tri4& t);

struct AxiomReport {
  std::vector<Report> axioms;
  bool pass() const;
  const Report* find(const std::string& name) const;
  json to_json() const;
};
AxiomReport verify_RT(const Mutation& M, const TriangleFamily& nabla);
AxiomReport verify_LT(const Mutation& M, const TriangleFamily& delta);
// both gluing shapes over all pairs of generators
Report verify_pretriangulated(const Mutation& M, const TriangleFamily& nabla, const TriangleFamily& delta);
// refuses without MT4'; Sigma Omega and Omega Sigma through Psi, then RT/LT with Sigma an equivalence
AxiomReport verify_triangulated(const Mutation& M, const MutationFunctors& F, const TriangleFamily& nabla,
                                const TriangleFamily& delta);
// C/[I](W, -) exact at the middle terms of right triangles, C/[I](-, W) for left ones
Report exactness_probe(const Mutation& M, const TriangleFamily& fam);

// Two runs with different frozen choices: natural isos between the functors, and generator
// triangles matched through (id, id, z, mu_X) resp. (nu_Z, x, id, id).
Report compare_choices(const Mutation& A, const MutationFunctors& FA, const TriangleFamily& nA,
                       const TriangleFamily& dA, const Mutation& B, const MutationFunctors& FB,
                       const TriangleFamily& nB, const TriangleFamily& dB);

}  // namespace extricat
