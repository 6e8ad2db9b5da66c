#pragma once

#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/cohomology.hpp"
#include "compalg/matrix.hpp"
#include "compalg/multilinear.hpp"

namespace compalg {

struct CompatibleLieAlgebra {
  int dim = 0;
  BilinearMap b1, b2;  // the two brackets
};

// Skew-symmetry and Jacobi for each bracket, plus the mixed six-term
// identity
//   [x,[y,z]_1]_2 + [y,[z,x]_1]_2 + [z,[x,y]_1]_2
// + [x,[y,z]_2]_1 + [y,[z,x]_2]_1 + [z,[x,y]_2]_1 = 0.
ValidationReport validate_compatible_lie(const CompatibleLieAlgebra& g);

// Actions as one matrix per basis element of g.
struct CompatibleLieRep {
  int dim_v = 0;
  std::vector<Matrix> rho1, rho2;
};

// rho(x) for an arbitrary coordinate vector x.
Matrix rho_apply(const std::vector<Matrix>& rho, const Vec& x);

// Representation law for each action plus the mixed identity
// rho2([x,y]_1) + rho1([x,y]_2) =
//   rho1(x)rho2(y) - rho1(y)rho2(x) + rho2(x)rho1(y) - rho2(y)rho1(x).
ValidationReport validate_lie_rep(const CompatibleLieAlgebra& g,
                                  const CompatibleLieRep& v);

// Commutator brackets [a,b]_i = a .i b - b .i a and commutator actions
// rho_i(a)(m) = a .i m - m .i a.
CompatibleLieAlgebra skew_symmetrize_algebra(const CompatibleAlgebra& a);
CompatibleLieRep skew_symmetrize_bimodule(const CompatibleAlgebra& a,
                                          const CompatibleBimodule& m);

int64_t binom(int n, int k);

// Walks strictly increasing index tuples over {0..dim-1} lexicographically.
bool next_increasing(std::vector<int>& multi, int dim);

// Lexicographic rank of a strictly increasing tuple among all such tuples.
int64_t increasing_rank(const std::vector<int>& multi, int dim);

// Alternating multilinear map wedge^n g -> V stored on strictly increasing
// basis tuples, output index major. Arity 0 is a plain vector in V.
class LieCochain {
 public:
  LieCochain() : arity_(0), dim_g_(0), dim_v_(0) {}
  LieCochain(int arity, int dim_g, int dim_v);

  int arity() const { return arity_; }
  int dim_g() const { return dim_g_; }
  int dim_v() const { return dim_v_; }
  int64_t tuple_count() const { return tuples_; }

  Rational& at(int out, const std::vector<int>& inc_multi);
  const Rational& at(int out, const std::vector<int>& inc_multi) const;

  // Value on an arbitrary basis tuple: repeats give zero, otherwise the
  // permutation sign times the stored coefficient.
  Vec value_on_basis(const std::vector<int>& multi) const;

  const Vec& coords() const { return c_; }
  static LieCochain from_coords(int arity, int dim_g, int dim_v, Vec coords);

  LieCochain operator+(const LieCochain& o) const;
  LieCochain operator-(const LieCochain& o) const;
  LieCochain scaled(const Rational& k) const;
  bool operator==(const LieCochain& o) const;
  bool is_zero() const { return vec_is_zero(c_); }

 private:
  int arity_, dim_g_, dim_v_;
  int64_t tuples_ = 1;
  Vec c_;
};

// Chevalley-Eilenberg coboundary for one bracket and one action:
// (delta f)(x_1..x_{n+1}) = sum_i (-1)^{i+1} rho(x_i) f(..hat x_i..)
//   + sum_{i<j} (-1)^{i+j} f([x_i,x_j], x_1,..hat x_i..hat x_j..).
LieCochain ce_delta_cochain(const BilinearMap& bracket,
                            const std::vector<Matrix>& rho,
                            const LieCochain& f);

// Matrix of the coboundary C^n_L -> C^{n+1}_L in the increasing-tuple basis.
Matrix ce_delta(const BilinearMap& bracket, const std::vector<Matrix>& rho,
                int dim_v, int n);

// Basis of C^0_cL = {v : rho1(x)v = rho2(x)v for all x}.
std::vector<Vec> lie_c0_basis(const CompatibleLieAlgebra& g,
                              const CompatibleLieRep& v);

// Matrix of delta_cL at degree n; degree 0 is written over lie_c0_basis
// coordinates, degree n >= 1 over the canonical tuple basis.
Matrix lie_delta_c_matrix(const CompatibleLieAlgebra& g,
                          const CompatibleLieRep& v, int n);

CochainComplexReport lie_cohomology(const CompatibleLieAlgebra& g,
                                    const CompatibleLieRep& v, int n_max);

// Componentwise full alternation sum_{sigma} sgn(sigma) f o sigma as a
// matrix C^n(A,M) -> C^n_L, and its block-diagonal tuple version.
Matrix alternation_matrix(int dim_g, int dim_v, int n);

// Verifies delta_cL o Phi_n = Phi_{n+1} o delta_c exactly for degrees
// 0..n_max over the skew-symmetrized algebra and representation.
ChainMapReport phi_skew_chain_map(const CompatibleAlgebra& a,
                                  const CompatibleBimodule& m, int n_max);

}  // namespace compalg
