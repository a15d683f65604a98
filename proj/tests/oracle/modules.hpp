#pragma once

#include <vector>

#include "extricat/workbench/ses_oracle.hpp"

namespace oracle_t {

using extricat::Elem;
using extricat::Mat;

// Syzygy of M_len over F_p[x]/(x^n): kernel of the projective cover M_n -> M_len,
// returned as Jordan block lengths.
std::vector<int> syzygy(int len, int n, Elem p);
// cosyzygy: cokernel of the injective hull M_len -> M_n
std::vector<int> cosyzygy(int len, int n, Elem p);

}  // namespace oracle_t
