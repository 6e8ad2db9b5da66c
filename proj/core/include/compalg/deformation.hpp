#pragma once

#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/cohomology.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/matrix.hpp"

namespace compalg {

// Truncated deformation over K[[t]]/(t^{N+1}). Terms are indexed 0..N and
// the index-0 terms must equal the base products.
struct TruncatedDeformation {
  CompatibleAlgebra base;
  int order = 1;
  std::vector<BilinearMap> mu1_terms;
  std::vector<BilinearMap> mu2_terms;

  // theta(k) = (mu1_terms[k], mu2_terms[k]) as a degree-2 tuple cochain.
  CompatCochain theta(int k) const;
};

// The deformation with all terms of order >= 1 equal to zero.
TruncatedDeformation undeformed(const CompatibleAlgebra& a, int order);

// Formal automorphism phi_t = phi_0 + t phi_1 + ... with phi_0 = id,
// truncated at the deformation order.
struct GaugeSeries {
  int order = 1;
  std::vector<Matrix> terms;  // phi_0..phi_N

  static GaugeSeries identity(int dim, int order);
};

// Shape and invariant checks; throw InputError on violation.
void check_deformation_shape(const TruncatedDeformation& d);
void check_gauge_shape(const GaugeSeries& g, int dim);

struct DeformationReport {
  bool valid = false;
  int first_failing_order = -1;
  // Per order k = 0..N: the three raw families (direct triple sums on
  // basis elements) and the compact tuple-bracket form
  // sum_{i+j=k} [[theta_i, theta_j]] = 0. The two formulations are
  // computed independently and must agree.
  ValidationReport details;
};

DeformationReport validate_deformation(const TruncatedDeformation& d);

struct InfinitesimalResult {
  bool undeformed = false;  // every term of order >= 1 vanishes
  int leading_order = 0;    // minimal p with theta(p) != 0; 0 if undeformed
  CompatCochain pair;       // theta(leading_order)
  bool is_cocycle = false;  // delta_c certificate over adjoint coefficients
};

// Throws MathError when d does not validate.
InfinitesimalResult infinitesimal(const TruncatedDeformation& d);

// mu'_i(t) = phi_t^{-1} . mu_i(t) . (phi_t x phi_t), truncated at the
// common order. Throws InputError on order mismatch.
TruncatedDeformation apply_gauge(const TruncatedDeformation& d,
                                 const GaugeSeries& g);

// Truncated-series inverse (Newton iteration; phi_0 = id guarantees
// existence) and composition (outer o inner).
GaugeSeries gauge_inverse(const GaugeSeries& g);
GaugeSeries gauge_compose(const GaugeSeries& outer, const GaugeSeries& inner);

struct ObstructionResult {
  // Ob = -1/2 sum_{i+j=N+1, i,j>=1} [[theta_i, theta_j]], degree 3.
  CompatCochain ob;
  bool is_cocycle = false;  // delta_c(Ob) = 0 certificate
};

// Throws MathError when d does not validate.
ObstructionResult obstruction(const TruncatedDeformation& d);

struct ExtendResult {
  bool extended = false;
  TruncatedDeformation extension;  // order N+1, set when extended
  CompatCochain ob;
  // When not extended: coordinates of [Ob] in the representative basis
  // of H^3_c reported by cohomology().
  Vec obstruction_class;
};

// Solves delta_c(x) = -Ob for the next-order pair. The solution is the
// deterministic one with zero free coordinates in the fixed cochain basis.
// Throws MathError when d does not validate.
ExtendResult extend(const TruncatedDeformation& d);

struct NormalizeResult {
  TruncatedDeformation reduced;
  GaugeSeries gauge;         // total gauge with apply_gauge(d, gauge) = reduced
  bool trivialized = false;  // all terms through N removed
  int leading_order = 0;     // first nonzero order of reduced; 0 if trivialized
};

// Repeatedly gauges away coboundary leading terms by phi_t = id + t^p phi_p
// until the leading pair is not a coboundary or all terms vanish. Throws
// MathError when d does not validate.
NormalizeResult normalize(const TruncatedDeformation& d);

struct RigidityReport {
  DegreeReport h2;    // H^2_c with adjoint coefficients
  bool rigid = false; // sufficient condition H^2_c = 0
};

RigidityReport rigidity_certificate(const CompatibleAlgebra& a);

}  // namespace compalg
