#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "compalg/algebra.hpp"

// Independent dense brute-force rank oracle for the golden dimension
// criterion. Everything below reads only raw structure constants and
// rebuilds each differential entry by entry from the defining formulas;
// ranks come from a plain fraction pivoting elimination over mpq_class.
// No code is shared with the Matrix / rref layer under test.
namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;

int rank(QMat m);

// dim H^n_c(A, M) for n = 0..n_max.
std::vector<int64_t> cohomology_dims(const compalg::CompatibleAlgebra& a,
                                     const compalg::CompatibleBimodule& m,
                                     int n_max);

// dim H_n^c(A, M) for n = 0..n_max.
std::vector<int64_t> homology_dims(const compalg::CompatibleAlgebra& a,
                                   const compalg::CompatibleBimodule& m,
                                   int n_max);

}  // namespace oracle
