#pragma once

#include "compalg/algebra.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/matrix.hpp"

namespace compalg {

// Square matrices act as linear operators on the algebra: column c holds
// the coordinates of the image of e_c.
using LinearOperator = Matrix;

// N(a) .i N(b) = N(a .i N(b) + N(a) .i b - N(a .i b)) for both products.
// Witnesses are (product index 1 or 2, i, j).
ValidationReport is_nijenhuis(const CompatibleAlgebra& a,
                              const LinearOperator& n);

// Deformed product a .N b = N(a) . b + a . N(b) - N(a . b).
BilinearMap nijenhuis_product(const BilinearMap& mu, const LinearOperator& n);

// R(a) R(b) = R(R(a) b + a R(b)) over a single product.
ValidationReport is_rota_baxter(const BilinearMap& mu,
                                const LinearOperator& r);

// Mixed identity for a pair of Rota-Baxter operators:
// R(a) S(b) + S(a) R(b) = R(S(a) b + a S(b)) + S(R(a) b + a R(b)).
ValidationReport are_compatible_rb(const BilinearMap& mu,
                                   const LinearOperator& r,
                                   const LinearOperator& s);

// The derived pair (mu_R, mu_S) with mu_R(a,b) = R(a) b + a R(b). Throws
// MathError unless R and S are Rota-Baxter and mutually compatible.
CompatibleAlgebra rb_compatible_pair_algebras(const AssociativeAlgebra& a,
                                              const LinearOperator& r,
                                              const LinearOperator& s);

struct NijenhuisDeformation {
  // (omega1, omega2) = delta_c(N), the trivial linear deformation terms.
  CompatCochain omega;
  // pointwise certificates: omega matches the one-sided formula, N absorbs
  // it (N omega_i(a,b) = N(a) .i N(b)), the pair is a cocycle, and
  // (A, omega1, omega2) is itself compatible.
  ValidationReport checks;
};

// Throws MathError when n is not Nijenhuis for a.
NijenhuisDeformation nijenhuis_trivial_deformation(const CompatibleAlgebra& a,
                                                   const LinearOperator& n);

}  // namespace compalg
