#include <random>

#include "compalg/cohomology.hpp"
#include "compalg/fixtures.hpp"
#include "compalg/gerstenhaber.hpp"
#include "doctest.h"

using namespace compalg;

namespace {

Cochain random_cochain(std::mt19937& rng, int arity, int dim) {
  std::uniform_int_distribution<int> d(-3, 3);
  Cochain f(arity, dim, dim);
  for (Rational& c : f.coords()) c = Q(d(rng));
  return f;
}

CompatCochain random_tuple(std::mt19937& rng, int degree, int dim) {
  std::vector<Cochain> comps;
  for (int i = 0; i < degree; ++i)
    comps.push_back(random_cochain(rng, degree, dim));
  return CompatCochain(std::move(comps));
}

}  // namespace

TEST_CASE("associativity is the vanishing of the self bracket") {
  for (const std::string& name : fixture_names()) {
    CompatibleAlgebra a = fixture(name);
    INFO(name);
    CHECK(bracket_g(a.mu1, a.mu1).is_zero());
    CHECK(bracket_g(a.mu2, a.mu2).is_zero());
    CHECK(bracket_g(a.mu1, a.mu2).is_zero());
  }
}

TEST_CASE("maurer-cartan test matches the validator on broken input") {
  CompatibleAlgebra a = fixture("F4");
  CHECK(is_maurer_cartan(a.mu1, a.mu2).holds);
  a.mu2.at(0, {1, 1}) = Q(2);
  MaurerCartanResult r = is_maurer_cartan(a.mu1, a.mu2);
  bool valid = validate_compatible_algebra(a).passed();
  CHECK_FALSE(r.holds);
  CHECK(valid == r.holds);
  CHECK(r.witness_component >= 0);
  CHECK_FALSE(r.witness.is_zero());
}

TEST_CASE("hochschild coboundary is bracketing with the product") {
  std::mt19937 rng(7);
  CompatibleAlgebra a = fixture("F2");
  BimoduleActions act = actions_from_product(a.mu1);
  for (int arity = 1; arity <= 3; ++arity) {
    Cochain f = random_cochain(rng, arity, a.dim);
    Cochain lhs = hochschild_delta_cochain(a.mu1, act, f);
    Rational sign = (arity % 2 == 1) ? Q(1) : Q(-1);  // (-1)^{n-1}
    Cochain rhs = bracket_g(a.mu1, f).scaled(sign);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("circle product degree bookkeeping") {
  std::mt19937 rng(11);
  Cochain f = random_cochain(rng, 2, 2);
  Cochain g = random_cochain(rng, 3, 2);
  CHECK(circle(f, g).arity() == 4);
  CHECK(bracket_g(f, g).arity() == 4);
}

TEST_CASE("tuple coboundary equals bracketing with the product pair") {
  std::mt19937 rng(13);
  for (const std::string& name : {std::string("F2"), std::string("F4")}) {
    CompatibleAlgebra a = fixture(name);
    CompatibleBimodule adj = adjoint_bimodule(a);
    for (int degree = 1; degree <= 3; ++degree) {
      CompatCochain f = random_tuple(rng, degree, a.dim);
      CompatCochain lhs = delta_c_tuple(a, adj, f);
      Rational sign = (degree % 2 == 1) ? Q(1) : Q(-1);
      CompatCochain rhs = compat_bracket(pair_cochain(a), f).scaled(sign);
      INFO(name << " degree " << degree);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("compatible coboundary squares to zero") {
  for (const std::string& name : fixture_names()) {
    CompatibleAlgebra a = fixture(name);
    CompatibleBimodule adj = adjoint_bimodule(a);
    for (int n = 0; n <= 2; ++n) {
      Matrix d_next = delta_c_matrix(a, adj, n + 1);
      Matrix d_here = delta_c_matrix(a, adj, n);
      INFO(name << " degree " << n);
      CHECK((d_next * d_here).is_zero());
    }
  }
}

TEST_CASE("golden cohomology dimensions for F1 and F2") {
  CompatibleAlgebra f1 = fixture("F1");
  CochainComplexReport r1 = cohomology(f1, adjoint_bimodule(f1), 3);
  std::vector<int64_t> want1 = {1, 0, 1, 0};
  for (int n = 0; n <= 3; ++n) CHECK(r1.degrees[n].dim == want1[n]);

  CompatibleAlgebra f2 = fixture("F2");
  CochainComplexReport r2 = cohomology(f2, adjoint_bimodule(f2), 3);
  std::vector<int64_t> want2 = {2, 1, 5, 7};
  for (int n = 0; n <= 3; ++n) CHECK(r2.degrees[n].dim == want2[n]);

  // representatives are honest cocycles and independent mod coboundaries
  for (int n = 1; n <= 3; ++n) {
    Matrix dn = delta_c_matrix(f2, adjoint_bimodule(f2), n);
    for (const Vec& rep : r2.degrees[n].representatives)
      CHECK(vec_is_zero(dn.apply(rep)));
  }
}

TEST_CASE("derivation report is consistent with degree one cohomology") {
  CompatibleAlgebra a = fixture("F2");
  CompatibleBimodule adj = adjoint_bimodule(a);
  DerivationReport d = derivations(a, adj);
  CochainComplexReport c = cohomology(a, adj, 1);
  CHECK(d.h1_dim == c.degrees[1].dim);
  CHECK(static_cast<int64_t>(d.derivations.size()) ==
        c.degrees[1].dim_cocycle);
  CHECK(static_cast<int64_t>(d.inner.size()) == c.degrees[1].dim_coboundary);
  // every listed derivation satisfies the Leibniz rule for both products
  Matrix d1 = delta_c_matrix(a, adj, 1);
  for (const Vec& v : d.derivations) CHECK(vec_is_zero(d1.apply(v)));
}

TEST_CASE("extension round trip and equivalence on one representative") {
  CompatibleAlgebra a = fixture("F2");
  CompatibleBimodule adj = adjoint_bimodule(a);
  CochainComplexReport coh = cohomology(a, adj, 2);
  REQUIRE(coh.degrees[2].dim > 0);
  Vec rep = coh.degrees[2].representatives[0];
  CompatCochain pair = CompatCochain::from_coords(2, a.dim, a.dim, rep);

  ExtensionDatum e = extension_from_cocycle(a, adj, pair);
  CHECK(validate_extension(a, adj, e).passed());
  CHECK(cocycle_from_extension(a, adj, e) == pair);

  // shifting by a coboundary gives an equivalent extension
  Cochain g(1, a.dim, a.dim);
  g.at(0, {1}) = Q(3);
  g.at(1, {0}) = Q(-2);
  CompatCochain shifted =
      pair + delta_c_tuple(a, adj, CompatCochain({g}));
  ExtensionDatum e2 = extension_from_cocycle(a, adj, shifted);
  EquivalenceResult eq = extensions_equivalent(a, adj, e, e2);
  CHECK(eq.equivalent);

  // a different class is not equivalent
  CompatCochain doubled = pair + pair;
  ExtensionDatum e3 = extension_from_cocycle(a, adj, doubled);
  CHECK_FALSE(extensions_equivalent(a, adj, e, e3).equivalent);
}

TEST_CASE("non-cocycles are rejected by the extension constructor") {
  CompatibleAlgebra a = fixture("F2");
  CompatibleBimodule adj = adjoint_bimodule(a);
  Matrix d2 = delta_c_matrix(a, adj, 2);
  // scan the basis pairs for one that is not a cocycle
  bool found = false;
  for (int i = 0; i < d2.cols() && !found; ++i) {
    Vec v = basis_vec(d2.cols(), i);
    if (vec_is_zero(d2.apply(v))) continue;
    found = true;
    CompatCochain bad = CompatCochain::from_coords(2, a.dim, a.dim, v);
    CHECK_THROWS_AS(extension_from_cocycle(a, adj, bad), MathError);
  }
  CHECK(found);
}

TEST_CASE("phi chain map has zero residual on fixtures") {
  for (const std::string& name : fixture_names()) {
    ChainMapReport r = phi_chain_map_check(fixture(name), 2);
    INFO(name);
    CHECK(r.all_zero);
  }
}
