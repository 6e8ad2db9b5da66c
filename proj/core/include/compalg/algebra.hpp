#pragma once

#include <string>
#include <vector>

#include "compalg/multilinear.hpp"

namespace compalg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<int> witness;  // basis indices of the first failing tuple
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

struct AssociativeAlgebra {
  int dim = 0;
  BilinearMap product;  // arity 2, dim_in = dim_out = dim
};

// Two multiplications on the same space. Compatibility means every linear
// combination k mu1 + l mu2 is associative, equivalently the mixed
// associator identity holds on basis triples.
struct CompatibleAlgebra {
  int dim = 0;
  BilinearMap mu1, mu2;
};

// Left and right actions of one product on a module: l[j][i][m] is the
// e_j coefficient of e_i . m_m, r[j][m][i] the e_j coefficient of m_m . e_i.
class BimoduleActions {
 public:
  BimoduleActions() : dim_a_(0), dim_m_(0) {}
  BimoduleActions(int dim_a, int dim_m);

  int dim_a() const { return dim_a_; }
  int dim_m() const { return dim_m_; }

  Rational& l(int out, int a, int m) { return l_[lidx(out, a, m)]; }
  const Rational& l(int out, int a, int m) const { return l_[lidx(out, a, m)]; }
  Rational& r(int out, int m, int a) { return r_[ridx(out, m, a)]; }
  const Rational& r(int out, int m, int a) const { return r_[ridx(out, m, a)]; }

  Vec left_on_basis(int a, int m) const;
  Vec right_on_basis(int m, int a) const;
  Vec left(const Vec& a, const Vec& m) const;
  Vec right(const Vec& m, const Vec& a) const;

  BimoduleActions operator+(const BimoduleActions& o) const;
  BimoduleActions scaled(const Rational& k) const;
  bool operator==(const BimoduleActions& o) const;

 private:
  size_t lidx(int out, int a, int m) const {
    return (static_cast<size_t>(out) * dim_a_ + a) * dim_m_ + m;
  }
  size_t ridx(int out, int m, int a) const {
    return (static_cast<size_t>(out) * dim_m_ + m) * dim_a_ + a;
  }
  int dim_a_, dim_m_;
  std::vector<Rational> l_, r_;
};

struct CompatibleBimodule {
  int dim_m = 0;
  BimoduleActions act1, act2;  // actions of mu1 and mu2 respectively
};

Vec basis_vec(int dim, int i);

// Product of two coordinate vectors under a bilinear map.
Vec mul(const BilinearMap& mu, const Vec& a, const Vec& b);

ValidationReport validate_associative(const AssociativeAlgebra& a);
ValidationReport validate_compatible_algebra(const CompatibleAlgebra& a);

// Axioms of a bimodule over the single product `mu`.
ValidationReport validate_bimodule(const BilinearMap& mu,
                                   const BimoduleActions& act);

// Bimodule axioms for both products plus the three mixed identities.
ValidationReport validate_compatible_bimodule(const CompatibleAlgebra& a,
                                              const CompatibleBimodule& m);

// Left/right multiplication actions of a single product on its own space.
BimoduleActions actions_from_product(const BilinearMap& mu);

// M = A with both actions given by the multiplications.
CompatibleBimodule adjoint_bimodule(const CompatibleAlgebra& a);

// Product on A (+) M: (a,m)(b,n) = (ab, an + mb + twist(a,b)); pass
// twist = nullptr for the plain semidirect product. A coordinates first.
BilinearMap semidirect_product_map(const BilinearMap& mu,
                                   const BimoduleActions& act,
                                   const BilinearMap* twist = nullptr);

// Dual space M* with (a . f)(m) = f(m . a) and (f . a)(m) = f(a . m).
CompatibleBimodule dual_bimodule(const CompatibleBimodule& m);

// A (+) M with products (a,m)(b,n) = (ab, an + mb); A basis first.
CompatibleAlgebra semidirect_product(const CompatibleAlgebra& a,
                                     const CompatibleBimodule& m);

// A (+) M with mu1 the semidirect product of (product, act) and mu2 the
// same product twisted by a Hochschild 2-cocycle f: A x A -> M. Throws
// MathError when f is not a 2-cocycle.
CompatibleAlgebra twisted_pair(const AssociativeAlgebra& a,
                               const BimoduleActions& act,
                               const BilinearMap& f);

// k mu1 + l mu2 packaged as a single associative algebra.
AssociativeAlgebra sum_algebra(const CompatibleAlgebra& a,
                               const Rational& k = Rational(1),
                               const Rational& l = Rational(1));

// Matching actions k act1 + l act2 for sum_algebra coefficients.
BimoduleActions sum_bimodule(const CompatibleBimodule& m,
                             const Rational& k = Rational(1),
                             const Rational& l = Rational(1));

}  // namespace compalg
