#pragma once

#include <optional>
#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/matrix.hpp"

namespace compalg {

// Graded spaces C_0..C_max with two families of face maps per level:
// faces1[n][i] and faces2[n][i] map C_n -> C_{n-1} for i = 0..n.
// faces*[0] is empty.
struct PresimplicialPair {
  std::vector<int64_t> dims;
  std::vector<std::vector<Matrix>> faces1;
  std::vector<std::vector<Matrix>> faces2;

  int max_level() const { return static_cast<int>(dims.size()) - 1; }
};

// Simplicial identities for each family, the mixed identity on pairs
// i < j, and the derived anticommuting of the alternating-sum
// differentials. Shape mismatches throw InputError.
ValidationReport validate_presimplicial_pair(const PresimplicialPair& p);

// Alternating sums sum_i (-1)^i face[n][i] : C_n -> C_{n-1}, n >= 1.
Matrix boundary1(const PresimplicialPair& p, int n);
Matrix boundary2(const PresimplicialPair& p, int n);

// Hochschild chains C_n = M (x) A^(x)n with basis ordered by module index
// first, then the A multi-index lexicographically. Family i is built from
// (l_i, r_i, mu_i): face 0 acts by m.a_1, faces 1..n-1 multiply adjacent
// tensor slots, face n acts by a_n.m.
PresimplicialPair hochschild_faces(const CompatibleAlgebra& a,
                                   const CompatibleBimodule& m, int n_max);

// Combined complex of a compatible presimplicial pair. Degree n >= 1 is
// n copies of C_n; degree 0 is the quotient C_0 / im(d - d') on which
// x -> [d x] = [d' x] is well defined.
struct CompatChainComplex {
  std::vector<int64_t> dims;
  // boundaries[n] : (C^c)_n -> (C^c)_{n-1} for 1 <= n <= max level;
  // boundaries[0] is an empty placeholder.
  std::vector<Matrix> boundaries;
  // Degree-0 quotient: classes of these C_0 vectors form a basis, and
  // c0_projection maps C_0 coordinates to quotient coordinates.
  std::vector<Vec> c0_representatives;
  Matrix c0_projection;
};

// Throws MathError when the pair fails its validator or when the
// assembled boundaries do not square to zero.
CompatChainComplex compat_chain_complex(const PresimplicialPair& p);

struct HomologyDegree {
  int degree = 0;
  int64_t dim_chain = 0;
  int64_t dim_cycle = 0;
  int64_t dim_boundary = 0;
  int64_t dim = 0;
  // Cycle coordinates; degree 0 in quotient coordinates, higher degrees
  // in the tuple chain basis.
  std::vector<Vec> representatives;
};

struct ChainComplexReport {
  std::vector<HomologyDegree> degrees;  // 0..n_max
};

ChainComplexReport homology(const CompatibleAlgebra& a,
                            const CompatibleBimodule& m, int n_max);

// First-homology presentation check for commutative pairs: the quotient
// of A (x) A by the span R of
//   a .1 b (x) c - a (x) b .1 c + c .1 a (x) b
// + a .2 b (x) c - a (x) b .2 c + c .2 a (x) b
// over basis triples, against H_1 of the adjoint complex. Also verifies
// the left (mu1 + mu2)-action descends to the quotient and whether R
// coincides with the degree-2 boundary image. Throws MathError for
// non-commutative input or when the designated unit fails its law.
struct KahlerReport {
  int64_t dim_h1 = 0;
  int64_t dim_quotient = 0;
  bool dims_match = false;
  bool action_well_defined = false;
  bool spans_coincide = false;
  std::vector<Vec> relation_span;  // independent spanning set of R
  std::vector<Vec> boundary_span;  // independent spanning set of im d^c_2
};

KahlerReport kahler_check(const CompatibleAlgebra& a,
                          const std::optional<Vec>& sum_unit = std::nullopt);

}  // namespace compalg
