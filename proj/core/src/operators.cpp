#include "compalg/operators.hpp"

#include "compalg/cohomology.hpp"

namespace compalg {

namespace {

void check_operator_shape(int dim, const LinearOperator& n) {
  if (n.rows() != dim || n.cols() != dim)
    throw InputError("operator must be square of the algebra dimension");
}

// N(a) . N(b) - N(a . N(b) + N(a) . b - N(a . b)) on basis pairs.
CheckResult nijenhuis_check(const std::string& name, const BilinearMap& mu,
                            const LinearOperator& n, int product_index) {
  int dim = mu.dim_in();
  CheckResult out{name, true, {}, {}};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec a = basis_vec(dim, i), b = basis_vec(dim, j);
      Vec na = n.apply(a), nb = n.apply(b);
      Vec lhs = mul(mu, na, nb);
      Vec rhs = n.apply(vec_sub(vec_add(mul(mu, a, nb), mul(mu, na, b)),
                                n.apply(mul(mu, a, b))));
      if (lhs != rhs) {
        out.passed = false;
        out.witness = {product_index, i, j};
        return out;
      }
    }
  return out;
}

}  // namespace

ValidationReport is_nijenhuis(const CompatibleAlgebra& a,
                              const LinearOperator& n) {
  check_operator_shape(a.dim, n);
  ValidationReport rep;
  rep.checks.push_back(nijenhuis_check("nijenhuis_mu1", a.mu1, n, 1));
  rep.checks.push_back(nijenhuis_check("nijenhuis_mu2", a.mu2, n, 2));
  return rep;
}

BilinearMap nijenhuis_product(const BilinearMap& mu, const LinearOperator& n) {
  int dim = mu.dim_in();
  check_operator_shape(dim, n);
  BilinearMap out = make_bilinear(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec a = basis_vec(dim, i), b = basis_vec(dim, j);
      Vec v = vec_sub(vec_add(mul(mu, n.apply(a), b), mul(mu, a, n.apply(b))),
                      n.apply(mul(mu, a, b)));
      for (int k = 0; k < dim; ++k) out.at(k, {i, j}) = v[k];
    }
  return out;
}

ValidationReport is_rota_baxter(const BilinearMap& mu,
                                const LinearOperator& r) {
  int dim = mu.dim_in();
  check_operator_shape(dim, r);
  ValidationReport rep;
  CheckResult c{"rota_baxter", true, {}, {}};
  for (int i = 0; i < dim && c.passed; ++i)
    for (int j = 0; j < dim && c.passed; ++j) {
      Vec a = basis_vec(dim, i), b = basis_vec(dim, j);
      Vec ra = r.apply(a), rb = r.apply(b);
      Vec lhs = mul(mu, ra, rb);
      Vec rhs = r.apply(vec_add(mul(mu, ra, b), mul(mu, a, rb)));
      if (lhs != rhs) {
        c.passed = false;
        c.witness = {i, j};
      }
    }
  rep.checks.push_back(std::move(c));
  return rep;
}

ValidationReport are_compatible_rb(const BilinearMap& mu,
                                   const LinearOperator& r,
                                   const LinearOperator& s) {
  int dim = mu.dim_in();
  check_operator_shape(dim, r);
  check_operator_shape(dim, s);
  ValidationReport rep;
  CheckResult c{"rb_compatible", true, {}, {}};
  for (int i = 0; i < dim && c.passed; ++i)
    for (int j = 0; j < dim && c.passed; ++j) {
      Vec a = basis_vec(dim, i), b = basis_vec(dim, j);
      Vec ra = r.apply(a), rb = r.apply(b);
      Vec sa = s.apply(a), sb = s.apply(b);
      Vec lhs = vec_add(mul(mu, ra, sb), mul(mu, sa, rb));
      Vec rhs = vec_add(
          r.apply(vec_add(mul(mu, sa, b), mul(mu, a, sb))),
          s.apply(vec_add(mul(mu, ra, b), mul(mu, a, rb))));
      if (lhs != rhs) {
        c.passed = false;
        c.witness = {i, j};
      }
    }
  rep.checks.push_back(std::move(c));
  return rep;
}

CompatibleAlgebra rb_compatible_pair_algebras(const AssociativeAlgebra& a,
                                              const LinearOperator& r,
                                              const LinearOperator& s) {
  if (!is_rota_baxter(a.product, r).passed())
    throw MathError("first operator is not Rota-Baxter");
  if (!is_rota_baxter(a.product, s).passed())
    throw MathError("second operator is not Rota-Baxter");
  if (!are_compatible_rb(a.product, r, s).passed())
    throw MathError("operators are not a compatible Rota-Baxter pair");
  auto derived = [&](const LinearOperator& op) {
    BilinearMap out = make_bilinear(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        Vec x = basis_vec(a.dim, i), y = basis_vec(a.dim, j);
        Vec v = vec_add(mul(a.product, op.apply(x), y),
                        mul(a.product, x, op.apply(y)));
        for (int k = 0; k < a.dim; ++k) out.at(k, {i, j}) = v[k];
      }
    return out;
  };
  return CompatibleAlgebra{a.dim, derived(r), derived(s)};
}

NijenhuisDeformation nijenhuis_trivial_deformation(const CompatibleAlgebra& a,
                                                   const LinearOperator& n) {
  if (!is_nijenhuis(a, n).passed())
    throw MathError("operator is not Nijenhuis for the pair");
  NijenhuisDeformation out;
  // coords are out-major: coeff of e_out in N(e_in) sits at out*dim + in,
  // which is the row-major flattening of the operator matrix
  Cochain n_cochain =
      Cochain::from_coords(1, a.dim, a.dim, vec_concat(n.rows_as_vectors()));
  CompatibleBimodule adj = adjoint_bimodule(a);
  CompatCochain omega({hochschild_delta_cochain(a.mu1, adj.act1, n_cochain),
                       hochschild_delta_cochain(a.mu2, adj.act2, n_cochain)});
  out.omega = omega;

  ValidationReport& rep = out.checks;
  // omega_i(a,b) = a .i N(b) + N(a) .i b - N(a .i b) pointwise
  for (int which = 0; which < 2; ++which) {
    const BilinearMap& mu = which == 0 ? a.mu1 : a.mu2;
    CheckResult c{which == 0 ? "lin_nij_1_mu1" : "lin_nij_1_mu2", true, {}, {}};
    CheckResult c2{which == 0 ? "lin_nij_2_mu1" : "lin_nij_2_mu2", true, {}, {}};
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        Vec x = basis_vec(a.dim, i), y = basis_vec(a.dim, j);
        Vec expected = vec_sub(
            vec_add(mul(mu, x, n.apply(y)), mul(mu, n.apply(x), y)),
            n.apply(mul(mu, x, y)));
        Vec got = omega.comp(which).value_on_basis({i, j});
        if (c.passed && got != expected) {
          c.passed = false;
          c.witness = {which + 1, i, j};
        }
        Vec absorbed = n.apply(got);
        Vec product_of_images = mul(mu, n.apply(x), n.apply(y));
        if (c2.passed && absorbed != product_of_images) {
          c2.passed = false;
          c2.witness = {which + 1, i, j};
        }
      }
    rep.checks.push_back(std::move(c));
    rep.checks.push_back(std::move(c2));
  }
  rep.checks.push_back(
      {"omega_cocycle", delta_c_tuple(a, adj, omega).is_zero(), {}, {}});
  CompatibleAlgebra deformed{a.dim, omega.comp(0), omega.comp(1)};
  ValidationReport pair_ok = validate_compatible_algebra(deformed);
  rep.checks.push_back({"deformed_pair_compatible", pair_ok.passed(),
                        pair_ok.first_failure()
                            ? pair_ok.first_failure()->witness
                            : std::vector<int>{},
                        {}});
  return out;
}

}  // namespace compalg
