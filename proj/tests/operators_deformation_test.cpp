#include <random>

#include "compalg/cohomology.hpp"
#include "compalg/deformation.hpp"
#include "compalg/fixtures.hpp"
#include "compalg/operators.hpp"
#include "doctest.h"

using namespace compalg;

namespace {

// random cocycle pair in the kernel of delta_c at degree 2, so the
// order-1 deformation equation holds by construction
CompatCochain random_order1(std::mt19937& rng, const CompatibleAlgebra& a) {
  Matrix d2 = delta_c_matrix(a, adjoint_bimodule(a), 2);
  std::vector<Vec> ker = kernel_basis(d2);
  std::uniform_int_distribution<int> d(-2, 2);
  Vec coords = vec_zero(d2.cols());
  for (const Vec& k : ker) coords = vec_add(coords, vec_scale(Q(d(rng)), k));
  return CompatCochain::from_coords(2, a.dim, a.dim, coords);
}

TruncatedDeformation order1(const CompatibleAlgebra& a,
                            const CompatCochain& t1) {
  TruncatedDeformation d;
  d.base = a;
  d.order = 1;
  d.mu1_terms = {a.mu1, t1.comp(0)};
  d.mu2_terms = {a.mu2, t1.comp(1)};
  return d;
}

}  // namespace

TEST_CASE("left multiplication by x is nijenhuis on F2") {
  CompatibleAlgebra a = fixture("F2");
  Matrix n = fixture_nijenhuis_n();
  CHECK(is_nijenhuis(a, n).passed());

  // a genuine non-example: N(1) = 0, N(x) = 1
  Matrix bad(2, 2);
  bad(0, 1) = Q(1);
  ValidationReport r = is_nijenhuis(a, bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->witness.size() == 3);
}

TEST_CASE("nijenhuis trivial deformation equals the coboundary of N") {
  CompatibleAlgebra a = fixture("F2");
  Matrix n = fixture_nijenhuis_n();
  NijenhuisDeformation nd = nijenhuis_trivial_deformation(a, n);
  CHECK(nd.checks.passed());

  // omega = delta_c of N viewed as a 1-cochain
  Cochain nc = Cochain::from_coords(1, a.dim, a.dim,
                                    vec_concat(n.rows_as_vectors()));
  CompatCochain expected =
      delta_c_tuple(a, adjoint_bimodule(a), CompatCochain({nc}));
  CHECK(nd.omega == expected);

  // and it is a valid order-1 deformation
  DeformationReport rep = validate_deformation(order1(a, nd.omega));
  CHECK(rep.valid);
}

TEST_CASE("rota-baxter checks on F2 with R = S possibilities") {
  CompatibleAlgebra a = fixture("F2");
  Matrix r = fixture_nijenhuis_n();
  Matrix zero(2, 2);
  CHECK(is_rota_baxter(a.mu1, r).passed());
  CHECK(is_rota_baxter(a.mu1, zero).passed());
  CHECK(are_compatible_rb(a.mu1, r, zero).passed());

  AssociativeAlgebra base{a.dim, a.mu1};
  CompatibleAlgebra derived = rb_compatible_pair_algebras(base, r, zero);
  CHECK(validate_compatible_algebra(derived).passed());
  // mu_S with S = 0 is the zero product
  CHECK(derived.mu2.is_zero());
  // mu_R(1,1) = R(1)1 + 1R(1) = 2x
  CHECK(mul(derived.mu1, basis_vec(2, 0), basis_vec(2, 0)) ==
        Vec{Q(0), Q(2)});

  Matrix notrb = Matrix::identity(2);
  notrb(0, 0) = Q(2);
  if (!is_rota_baxter(a.mu1, notrb).passed())
    CHECK_THROWS_AS(rb_compatible_pair_algebras(base, notrb, zero),
                    MathError);
}

TEST_CASE("undeformed and scaling deformations validate") {
  for (const std::string& name : {std::string("F2"), std::string("F4")}) {
    CompatibleAlgebra a = fixture(name);
    INFO(name);
    CHECK(validate_deformation(undeformed(a, 2)).valid);

    TruncatedDeformation scaling;
    scaling.base = a;
    scaling.order = 1;
    scaling.mu1_terms = {a.mu1, a.mu1};
    scaling.mu2_terms = {a.mu2, a.mu2};
    CHECK(validate_deformation(scaling).valid);

    InfinitesimalResult inf = infinitesimal(scaling);
    CHECK_FALSE(inf.undeformed);
    CHECK(inf.leading_order == 1);
    CHECK(inf.is_cocycle);
  }
}

TEST_CASE("a broken deformation reports its failing order") {
  CompatibleAlgebra a = fixture("F4");
  TruncatedDeformation d = undeformed(a, 1);
  d.mu1_terms[1].at(0, {1, 1}) = Q(1);
  d.mu2_terms[1].at(1, {0, 0}) = Q(5);
  DeformationReport r = validate_deformation(d);
  if (!r.valid) CHECK(r.first_failing_order >= 1);
  // validation agrees with the bracket form computed directly
  CompatCochain t1 = d.theta(1);
  CompatibleBimodule adj = adjoint_bimodule(a);
  bool cocycle = delta_c_tuple(a, adj, t1).is_zero();
  CHECK(r.valid == cocycle);
}

TEST_CASE("gauge action composes and inverts") {
  std::mt19937 rng(23);
  CompatibleAlgebra a = fixture("F2");
  TruncatedDeformation d = order1(a, random_order1(rng, a));
  REQUIRE(validate_deformation(d).valid);

  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_gauge = [&]() {
    GaugeSeries g = GaugeSeries::identity(a.dim, d.order);
    for (size_t p = 1; p < g.terms.size(); ++p)
      for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) g.terms[p](r, c) = Q(coeff(rng));
    return g;
  };
  GaugeSeries g = random_gauge();
  GaugeSeries h = random_gauge();

  TruncatedDeformation lhs = apply_gauge(apply_gauge(d, g), h);
  TruncatedDeformation rhs = apply_gauge(d, gauge_compose(g, h));
  CHECK(lhs.mu1_terms == rhs.mu1_terms);
  CHECK(lhs.mu2_terms == rhs.mu2_terms);

  // gauged deformations still validate, and the inverse undoes the gauge
  CHECK(validate_deformation(lhs).valid);
  TruncatedDeformation back = apply_gauge(apply_gauge(d, g), gauge_inverse(g));
  CHECK(back.mu1_terms == d.mu1_terms);
  CHECK(back.mu2_terms == d.mu2_terms);
}

TEST_CASE("coboundary deformations normalize to zero") {
  CompatibleAlgebra a = fixture("F2");
  // start undeformed, gauge by id + t phi to create a pure coboundary term
  TruncatedDeformation d = undeformed(a, 1);
  GaugeSeries g = GaugeSeries::identity(a.dim, 1);
  g.terms[1](0, 1) = Q(2);
  g.terms[1](1, 0) = Q(-1);
  TruncatedDeformation gauged = apply_gauge(d, g);
  REQUIRE(validate_deformation(gauged).valid);

  NormalizeResult n = normalize(gauged);
  CHECK(n.trivialized);
  CHECK(n.leading_order == 0);
  for (int p = 1; p <= n.reduced.order; ++p) CHECK(n.reduced.theta(p).is_zero());
  // the reported gauge really does carry d to reduced
  TruncatedDeformation redo = apply_gauge(gauged, n.gauge);
  CHECK(redo.mu1_terms == n.reduced.mu1_terms);
  CHECK(redo.mu2_terms == n.reduced.mu2_terms);
}

TEST_CASE("obstructions are cocycles and extension validates") {
  std::mt19937 rng(31);
  CompatibleAlgebra a = fixture("F2");
  for (int trial = 0; trial < 5; ++trial) {
    TruncatedDeformation d = order1(a, random_order1(rng, a));
    ObstructionResult ob = obstruction(d);
    CHECK(ob.is_cocycle);
    ExtendResult ext = extend(d);
    if (ext.extended) {
      CHECK(validate_deformation(ext.extension).valid);
      CHECK(ext.extension.order == 2);
    } else {
      CHECK_FALSE(vec_is_zero(ext.obstruction_class));
    }
  }
}

TEST_CASE("scaling deformation extends with zero higher terms") {
  CompatibleAlgebra a = fixture("F4");
  TruncatedDeformation d;
  d.base = a;
  d.order = 1;
  d.mu1_terms = {a.mu1, a.mu1};
  d.mu2_terms = {a.mu2, a.mu2};
  for (int target = 2; target <= 4; ++target) {
    ExtendResult ext = extend(d);
    REQUIRE(ext.extended);
    d = ext.extension;
    CHECK(d.order == target);
    CHECK(validate_deformation(d).valid);
  }
}

TEST_CASE("rigidity certificate matches degree two cohomology") {
  CompatibleAlgebra a = fixture("F1");
  RigidityReport r = rigidity_certificate(a);
  CochainComplexReport coh = cohomology(a, adjoint_bimodule(a), 2);
  CHECK(r.h2.dim == coh.degrees[2].dim);
  CHECK(r.rigid == (r.h2.dim == 0));
}
