#pragma once

#include <optional>
#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/matrix.hpp"

namespace compalg {

// Hochschild coboundary of a single cochain with respect to one product
// and one pair of actions:
// (delta f)(a_1..a_{n+1}) = a_1 f(a_2..a_{n+1})
//   + sum_{i=1}^{n} (-1)^i f(a_1,..., a_i a_{i+1}, ..., a_{n+1})
//   + (-1)^{n+1} f(a_1..a_n) a_{n+1}.
Cochain hochschild_delta_cochain(const BilinearMap& mu,
                                 const BimoduleActions& act,
                                 const Cochain& f);

// Matrix of the coboundary C^n(A,M) -> C^{n+1}(A,M) in the canonical
// basis (module index major, then input multi-index, lexicographic).
Matrix hochschild_delta(const BilinearMap& mu, const BimoduleActions& act,
                        int n);

// Basis of C^0_c = {m : a .1 m - m .1 a = a .2 m - m .2 a for all a},
// as vectors in module coordinates.
std::vector<Vec> c0c_basis(const CompatibleAlgebra& a,
                           const CompatibleBimodule& m);

// Degree-0 coboundary: delta(m)(a) = a .1 m - m .1 a, an element of
// C^1(A,M). On C^0_c both products give the same answer.
Cochain delta_c_vector(const CompatibleAlgebra& a, const CompatibleBimodule& m,
                       const Vec& v);

// Tuple coboundary (delta1 f_1, ..., delta1 f_i + delta2 f_{i-1}, ...,
// delta2 f_n) for degree >= 1.
CompatCochain delta_c_tuple(const CompatibleAlgebra& a,
                            const CompatibleBimodule& m,
                            const CompatCochain& f);

// Matrix of delta_c at degree n. For n = 0 the domain is written in
// c0c_basis coordinates; for n >= 1 in the canonical tuple basis
// (component major, then module index, then input multi-index).
Matrix delta_c_matrix(const CompatibleAlgebra& a, const CompatibleBimodule& m,
                      int n);

int64_t cochain_dim(int dim_a, int dim_m, int n);

struct DegreeReport {
  int degree = 0;
  int64_t dim_cochain = 0;
  int64_t dim_cocycle = 0;
  int64_t dim_coboundary = 0;
  int64_t dim = 0;  // cohomology dimension
  // Cocycle coordinates; classes form a basis of H^n. Degree 0 vectors are
  // in module coordinates, higher degrees in the tuple cochain basis.
  std::vector<Vec> representatives;
};

struct CochainComplexReport {
  std::vector<DegreeReport> degrees;  // 0..n_max
};

CochainComplexReport cohomology(const CompatibleAlgebra& a,
                                const CompatibleBimodule& m, int n_max);

struct DerivationReport {
  // Kernel of delta_c at degree 1: maps D with D(a .i b) =
  // D(a) .i b + a .i D(b) for both products, as C^1 coordinate vectors.
  std::vector<Vec> derivations;
  // Image of the degree-0 coboundary: maps a -> a .1 m - m .1 a for
  // m in C^0_c.
  std::vector<Vec> inner;
  int64_t h1_dim = 0;
  std::vector<Vec> representatives;
};

DerivationReport derivations(const CompatibleAlgebra& a,
                             const CompatibleBimodule& m);

// Abelian extension 0 -> M -> B -> A -> 0 with a chosen section. The
// total space carries A coordinates first, then M.
struct ExtensionDatum {
  CompatibleAlgebra total;
  Matrix i;  // M -> B
  Matrix j;  // B -> A
  Matrix s;  // A -> B, j s = id
};

// Builds the extension attached to a 2-cocycle (f1, f2); throws MathError
// when the pair is not a cocycle of the pair complex.
ExtensionDatum extension_from_cocycle(const CompatibleAlgebra& a,
                                      const CompatibleBimodule& m,
                                      const CompatCochain& pair);

// Reads the 2-cocycle off an extension through its section:
// f_i(a,b) = p_M(s(a) .i s(b) - s(a .i b)).
CompatCochain cocycle_from_extension(const CompatibleAlgebra& a,
                                     const CompatibleBimodule& m,
                                     const ExtensionDatum& e);

// Structural checks: exactness of i, j, the section property, abelian
// kernel, total-space compatibility, j being multiplicative, and the
// induced actions agreeing with m.
ValidationReport validate_extension(const CompatibleAlgebra& a,
                                    const CompatibleBimodule& m,
                                    const ExtensionDatum& e);

struct EquivalenceResult {
  bool equivalent = false;
  // When equivalent: g in C^1(A,M) with cocycle(e1) - cocycle(e2) =
  // delta_c(g); the equivalence is (a, mm) -> (a, mm + g(a)).
  Vec g_coords;
};

// Both extensions must induce the bimodule m on their kernels (validated
// data). Equivalence over id_A and id_M is decided by solving the linear
// system for g.
EquivalenceResult extensions_equivalent(const CompatibleAlgebra& a,
                                        const CompatibleBimodule& m,
                                        const ExtensionDatum& e1,
                                        const ExtensionDatum& e2);

struct ChainMapReport {
  bool all_zero = true;
  int first_failing_degree = -1;
  std::vector<int> degrees;  // degrees checked
};

// Verifies that summing tuple components intertwines delta_c with the
// Hochschild coboundary of the sum product mu1 + mu2 (self coefficients),
// as an exact matrix identity for degrees 1..n_max.
ChainMapReport phi_chain_map_check(const CompatibleAlgebra& a, int n_max);

}  // namespace compalg
