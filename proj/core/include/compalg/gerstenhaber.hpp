#pragma once

#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/multilinear.hpp"

namespace compalg {

// Tuple cochain for the pair complex. Degree n >= 1 carries n components
// of arity n with values in a module of dimension dim_out; degree matches
// graded Lie degree n-1 (tuple length = arity throughout). Degree 0
// elements of the complex are plain module vectors and are handled by the
// cohomology layer, not by this type.
class CompatCochain {
 public:
  CompatCochain() = default;
  explicit CompatCochain(std::vector<Cochain> components);
  static CompatCochain zero(int degree, int dim_in, int dim_out);

  int degree() const { return static_cast<int>(comps_.size()); }
  int dim_in() const { return comps_.empty() ? 0 : comps_[0].dim_in(); }
  int dim_out() const { return comps_.empty() ? 0 : comps_[0].dim_out(); }

  const Cochain& comp(int i) const { return comps_.at(i); }
  Cochain& comp(int i) { return comps_.at(i); }
  const std::vector<Cochain>& components() const { return comps_; }

  // Coordinates in the canonical basis: component index major, then the
  // output index, then the input multi-index.
  Vec coords() const;
  static CompatCochain from_coords(int degree, int dim_in, int dim_out,
                                   const Vec& coords);

  CompatCochain operator+(const CompatCochain& o) const;
  CompatCochain operator-(const CompatCochain& o) const;
  CompatCochain scaled(const Rational& k) const;
  bool operator==(const CompatCochain& o) const;
  bool is_zero() const;

 private:
  std::vector<Cochain> comps_;
};

// Gerstenhaber circle product of endotype cochains. f has arity m+1, g
// arity n+1; the result has arity m+n+1:
//   (f o g)(a_1,...,a_{m+n+1}) =
//     sum_{i=1}^{m+1} (-1)^{(i-1)n} f(a_1,...,g(a_i,...,a_{i+n}),...).
// Arity 0 operands are rejected.
Cochain circle(const Cochain& f, const Cochain& g);

// [f,g] = f o g - (-1)^{mn} g o f with m = arity(f)-1, n = arity(g)-1.
Cochain bracket_g(const Cochain& f, const Cochain& g);

// Cup product relative to one of the two multiplications:
// (f u g)(a_1..a_{m+n}) = f(a_1..a_m) . g(a_{m+1}..a_{m+n}).
enum class ProductSelector { mu1, mu2 };
Cochain cup(const CompatibleAlgebra& a, const Cochain& f, const Cochain& g,
            ProductSelector which);

// Componentwise bracket on tuples:
// component i of [[F,G]] is sum_{q+r=i+1} [F_q, G_r].
CompatCochain compat_bracket(const CompatCochain& f, const CompatCochain& g);

// phi collapses a tuple to the sum of its components; it intertwines the
// tuple bracket with the Gerstenhaber bracket.
Cochain phi(const CompatCochain& f);

struct MaurerCartanResult {
  bool holds = false;
  // When the test fails: index (0-based) of the first nonzero component of
  // [[(mu1,mu2),(mu1,mu2)]] and that component.
  int witness_component = -1;
  Cochain witness;
};

// The pair (mu1, mu2) consists of compatible associative products exactly
// when [[(mu1,mu2),(mu1,mu2)]] = 0; no validity is assumed of the input.
MaurerCartanResult is_maurer_cartan(const BilinearMap& mu1,
                                    const BilinearMap& mu2);

// Differential [[(mu1,mu2), F]] on tuples of degree >= 1.
CompatCochain d_mu(const CompatibleAlgebra& a, const CompatCochain& f);

// The pair (mu1, mu2) as a degree-2 tuple cochain.
CompatCochain pair_cochain(const CompatibleAlgebra& a);

}  // namespace compalg
