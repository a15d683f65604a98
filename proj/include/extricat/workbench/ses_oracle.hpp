#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "extricat/exactcat/mat.hpp"

namespace extricat::oracle {

// Brute force over F_p[x]/(x^n)-modules written as lists of Jordan block lengths (1-based).
// Nothing here uses cocycles; module maps are found by enumerating generator images.

Mat nilpotent(const std::vector<int>& lens, Elem p);
// every module map from A to B, as dim B x dim A matrices
std::vector<Mat> module_maps(const std::vector<int>& A, const std::vector<int>& B, Elem p);
// Jordan block lengths of a nilpotent matrix, ascending, from ranks of its powers
std::vector<int> jordan_type(const Mat& N);

struct SesCount {
  std::uint64_t classes = 0;                         // |Ext^1(C, A)|
  std::map<std::vector<int>, std::uint64_t> middle;  // classes per middle term
};
// Equivalence classes of exact 0 -> A -> B -> C -> 0, counted per middle term B as
// #{exact (x, y)} * |Hom(C, A)| / |Aut B|.
SesCount ses_classes(const std::vector<int>& C, const std::vector<int>& A, int n, Elem p);

// is A -X-> B -Y-> C a short exact sequence of modules
bool exact_modules(const Mat& NA, const Mat& NB, const Mat& NC, const Mat& X, const Mat& Y);

}  // namespace extricat::oracle
