#include "compalg/cohomology.hpp"

namespace compalg {

namespace {

void check_coeff_shapes(const BilinearMap& mu, const BimoduleActions& act,
                        const Cochain& f) {
  if (mu.arity() != 2 || mu.dim_in() != mu.dim_out())
    throw InputError("coboundary needs a product on A");
  if (act.dim_a() != mu.dim_in())
    throw InputError("coboundary action dimension mismatch");
  if (f.dim_in() != mu.dim_in() || f.dim_out() != act.dim_m())
    throw InputError("coboundary cochain shape mismatch");
}

void check_bimodule_shapes(const CompatibleAlgebra& a,
                           const CompatibleBimodule& m) {
  if (m.act1.dim_a() != a.dim || m.act2.dim_a() != a.dim ||
      m.act1.dim_m() != m.dim_m || m.act2.dim_m() != m.dim_m)
    throw InputError("bimodule does not match algebra dimensions");
}

// Solves M X = RHS column by column; throws MathError when inconsistent.
Matrix solve_matrix(const Matrix& m, const Matrix& rhs) {
  Matrix x(m.cols(), rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c) {
    Vec col(m.rows());
    for (int i = 0; i < m.rows(); ++i) col[i] = rhs(i, c);
    std::optional<Vec> sol = solve(m, col);
    if (!sol) throw MathError("inconsistent linear system");
    for (int i = 0; i < m.cols(); ++i) x(i, c) = (*sol)[i];
  }
  return x;
}

}  // namespace

Cochain hochschild_delta_cochain(const BilinearMap& mu,
                                 const BimoduleActions& act,
                                 const Cochain& f) {
  check_coeff_shapes(mu, act, f);
  int n = f.arity();
  int dim = f.dim_in();
  int dm = f.dim_out();
  Cochain out(n + 1, dim, dm);
  if (dim == 0) return out;
  std::vector<int> t(n + 1, 0);
  std::vector<int> sub(n, 0);
  do {
    Vec acc(dm);
    // a_1 . f(a_2 .. a_{n+1})
    for (int p = 0; p < n; ++p) sub[p] = t[p + 1];
    acc = vec_add(acc, act.left(basis_vec(dim, t[0]), f.value_on_basis(sub)));
    // inner contractions
    for (int i = 1; i <= n; ++i) {
      Vec prod = mu.value_on_basis({t[i - 1], t[i]});
      bool neg = i % 2 != 0;
      for (int k = 0; k < dim; ++k) {
        if (prod[k].is_zero()) continue;
        for (int p = 0; p < i - 1; ++p) sub[p] = t[p];
        sub[i - 1] = k;
        for (int p = i; p < n; ++p) sub[p] = t[p + 1];
        Vec fv = f.value_on_basis(sub);
        Vec term = vec_scale(prod[k], fv);
        acc = neg ? vec_sub(acc, term) : vec_add(acc, term);
      }
    }
    // (-1)^{n+1} f(a_1 .. a_n) . a_{n+1}
    for (int p = 0; p < n; ++p) sub[p] = t[p];
    Vec tail = act.right(f.value_on_basis(sub), basis_vec(dim, t[n]));
    acc = (n + 1) % 2 != 0 ? vec_sub(acc, tail) : vec_add(acc, tail);
    for (int k = 0; k < dm; ++k) out.at(k, t) = acc[k];
  } while (next_multi(t, dim));
  return out;
}

Matrix hochschild_delta(const BilinearMap& mu, const BimoduleActions& act,
                        int n) {
  if (n < 0) throw InputError("negative cochain degree");
  int dim = mu.dim_in();
  int dm = act.dim_m();
  int64_t dom = cochain_dim(dim, dm, n);
  int64_t cod = cochain_dim(dim, dm, n + 1);
  Matrix d(static_cast<int>(cod), static_cast<int>(dom));
  for (int64_t col = 0; col < dom; ++col) {
    Vec coords(static_cast<size_t>(dom));
    coords[static_cast<size_t>(col)] = Rational(1);
    Cochain e = Cochain::from_coords(n, dim, dm, std::move(coords));
    Vec img = hochschild_delta_cochain(mu, act, e).coords();
    for (int64_t row = 0; row < cod; ++row)
      if (!img[static_cast<size_t>(row)].is_zero())
        d(static_cast<int>(row), static_cast<int>(col)) =
            img[static_cast<size_t>(row)];
  }
  return d;
}

std::vector<Vec> c0c_basis(const CompatibleAlgebra& a,
                           const CompatibleBimodule& m) {
  check_bimodule_shapes(a, m);
  // rows: one commutator-difference condition per (a-basis, m-coordinate)
  Matrix cond(a.dim * m.dim_m, m.dim_m);
  for (int i = 0; i < a.dim; ++i) {
    Vec ea = basis_vec(a.dim, i);
    for (int mm = 0; mm < m.dim_m; ++mm) {
      Vec em = basis_vec(m.dim_m, mm);
      Vec v = vec_sub(
          vec_sub(m.act1.left(ea, em), m.act1.right(em, ea)),
          vec_sub(m.act2.left(ea, em), m.act2.right(em, ea)));
      for (int k = 0; k < m.dim_m; ++k) cond(i * m.dim_m + k, mm) = v[k];
    }
  }
  return kernel_basis(cond);
}

Cochain delta_c_vector(const CompatibleAlgebra& a, const CompatibleBimodule& m,
                       const Vec& v) {
  check_bimodule_shapes(a, m);
  if (static_cast<int>(v.size()) != m.dim_m)
    throw InputError("degree-0 cochain length mismatch");
  Cochain f = Cochain::from_coords(0, a.dim, m.dim_m, v);
  return hochschild_delta_cochain(a.mu1, m.act1, f);
}

CompatCochain delta_c_tuple(const CompatibleAlgebra& a,
                            const CompatibleBimodule& m,
                            const CompatCochain& f) {
  check_bimodule_shapes(a, m);
  if (f.dim_in() != a.dim || f.dim_out() != m.dim_m)
    throw InputError("tuple cochain shape mismatch");
  int n = f.degree();
  std::vector<Cochain> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    Cochain acc(n + 1, a.dim, m.dim_m);
    if (i < n)
      acc = acc + hochschild_delta_cochain(a.mu1, m.act1, f.comp(i));
    if (i > 0)
      acc = acc + hochschild_delta_cochain(a.mu2, m.act2, f.comp(i - 1));
    out.push_back(std::move(acc));
  }
  return CompatCochain(std::move(out));
}

Matrix delta_c_matrix(const CompatibleAlgebra& a, const CompatibleBimodule& m,
                      int n) {
  check_bimodule_shapes(a, m);
  if (n < 0) throw InputError("negative cochain degree");
  if (n == 0) {
    std::vector<Vec> basis = c0c_basis(a, m);
    int64_t cod = cochain_dim(a.dim, m.dim_m, 1);
    Matrix d(static_cast<int>(cod), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
      Vec img = delta_c_vector(a, m, basis[c]).coords();
      for (int64_t r = 0; r < cod; ++r)
        d(static_cast<int>(r), static_cast<int>(c)) =
            img[static_cast<size_t>(r)];
    }
    return d;
  }
  Matrix d1 = hochschild_delta(a.mu1, m.act1, n);
  Matrix d2 = hochschild_delta(a.mu2, m.act2, n);
  int block_rows = d1.rows(), block_cols = d1.cols();
  Matrix d((n + 1) * block_rows, n * block_cols);
  auto paste = [&](const Matrix& b, int bi, int bj) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c)
        if (!b(r, c).is_zero())
          d(bi * block_rows + r, bj * block_cols + c) = b(r, c);
  };
  for (int i = 0; i <= n; ++i) {
    if (i < n) paste(d1, i, i);
    if (i > 0) paste(d2, i, i - 1);
  }
  return d;
}

int64_t cochain_dim(int dim_a, int dim_m, int n) {
  return static_cast<int64_t>(dim_m) * pow_dim(dim_a, n);
}

CochainComplexReport cohomology(const CompatibleAlgebra& a,
                                const CompatibleBimodule& m, int n_max) {
  check_bimodule_shapes(a, m);
  if (n_max < 0) throw InputError("negative degree bound");
  CochainComplexReport rep;
  std::vector<Vec> c0 = c0c_basis(a, m);
  Matrix d_prev = delta_c_matrix(a, m, 0);

  {
    DegreeReport deg0;
    deg0.degree = 0;
    deg0.dim_cochain = static_cast<int64_t>(c0.size());
    std::vector<Vec> z0 = kernel_basis(d_prev);
    deg0.dim_cocycle = static_cast<int64_t>(z0.size());
    deg0.dim_coboundary = 0;
    deg0.dim = deg0.dim_cocycle;
    for (const Vec& k : z0) {
      // back to module coordinates
      Vec v = vec_zero(m.dim_m);
      for (size_t j = 0; j < c0.size(); ++j)
        v = vec_add(v, vec_scale(k[j], c0[j]));
      deg0.representatives.push_back(std::move(v));
    }
    rep.degrees.push_back(std::move(deg0));
  }

  for (int n = 1; n <= n_max; ++n) {
    Matrix dn = delta_c_matrix(a, m, n);
    DegreeReport deg;
    deg.degree = n;
    deg.dim_cochain = dn.cols();
    std::vector<Vec> z = kernel_basis(dn);
    std::vector<Vec> b = image_basis(d_prev);
    deg.dim_cocycle = static_cast<int64_t>(z.size());
    deg.dim_coboundary = static_cast<int64_t>(b.size());
    Subquotient q = subquotient({dn.cols(), z, b});
    deg.dim = q.dim;
    deg.representatives = std::move(q.representatives);
    rep.degrees.push_back(std::move(deg));
    d_prev = std::move(dn);
  }
  return rep;
}

DerivationReport derivations(const CompatibleAlgebra& a,
                             const CompatibleBimodule& m) {
  DerivationReport rep;
  Matrix d1 = delta_c_matrix(a, m, 1);
  Matrix d0 = delta_c_matrix(a, m, 0);
  rep.derivations = kernel_basis(d1);
  rep.inner = image_basis(d0);
  Subquotient q = subquotient({d1.cols(), rep.derivations, rep.inner});
  rep.h1_dim = q.dim;
  rep.representatives = std::move(q.representatives);
  return rep;
}

ExtensionDatum extension_from_cocycle(const CompatibleAlgebra& a,
                                      const CompatibleBimodule& m,
                                      const CompatCochain& pair) {
  check_bimodule_shapes(a, m);
  if (pair.degree() != 2 || pair.dim_in() != a.dim ||
      pair.dim_out() != m.dim_m)
    throw InputError("extension cocycle shape mismatch");
  if (!delta_c_tuple(a, m, pair).is_zero())
    throw MathError("extension input is not a 2-cocycle of the pair complex");

  ExtensionDatum e;
  e.total = CompatibleAlgebra{
      a.dim + m.dim_m,
      semidirect_product_map(a.mu1, m.act1, &pair.comp(0)),
      semidirect_product_map(a.mu2, m.act2, &pair.comp(1))};
  int db = a.dim + m.dim_m;
  e.i = Matrix(db, m.dim_m);
  for (int k = 0; k < m.dim_m; ++k) e.i(a.dim + k, k) = Rational(1);
  e.j = Matrix(a.dim, db);
  for (int k = 0; k < a.dim; ++k) e.j(k, k) = Rational(1);
  e.s = Matrix(db, a.dim);
  for (int k = 0; k < a.dim; ++k) e.s(k, k) = Rational(1);
  return e;
}

namespace {

// Projection B -> M along s(A): p(x) = i^{-1}(x - s(j(x))).
Matrix kernel_projection(const ExtensionDatum& e) {
  int db = e.total.dim;
  Matrix complement = Matrix::identity(db) - e.s * e.j;
  return solve_matrix(e.i, complement);
}

}  // namespace

CompatCochain cocycle_from_extension(const CompatibleAlgebra& a,
                                     const CompatibleBimodule& m,
                                     const ExtensionDatum& e) {
  check_bimodule_shapes(a, m);
  if (e.total.dim != a.dim + m.dim_m)
    throw InputError("extension total dimension mismatch");
  Matrix p = kernel_projection(e);
  Cochain f1(2, a.dim, m.dim_m), f2(2, a.dim, m.dim_m);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec sa = e.s.apply(basis_vec(a.dim, i));
      Vec sb = e.s.apply(basis_vec(a.dim, j));
      Vec v1 = p.apply(vec_sub(mul(e.total.mu1, sa, sb),
                               e.s.apply(a.mu1.value_on_basis({i, j}))));
      Vec v2 = p.apply(vec_sub(mul(e.total.mu2, sa, sb),
                               e.s.apply(a.mu2.value_on_basis({i, j}))));
      for (int k = 0; k < m.dim_m; ++k) {
        f1.at(k, {i, j}) = v1[k];
        f2.at(k, {i, j}) = v2[k];
      }
    }
  return CompatCochain({f1, f2});
}

ValidationReport validate_extension(const CompatibleAlgebra& a,
                                    const CompatibleBimodule& m,
                                    const ExtensionDatum& e) {
  check_bimodule_shapes(a, m);
  ValidationReport rep;
  auto push = [&rep](const std::string& name, bool ok,
                     std::vector<int> witness = {}) {
    rep.checks.push_back({name, ok, std::move(witness), {}});
  };

  int db = a.dim + m.dim_m;
  bool shapes = e.total.dim == db && e.i.rows() == db &&
                e.i.cols() == m.dim_m && e.j.rows() == a.dim &&
                e.j.cols() == db && e.s.rows() == db && e.s.cols() == a.dim;
  push("shape", shapes);
  if (!shapes) return rep;

  push("j_i_zero", (e.j * e.i).is_zero());
  push("j_s_identity", e.j * e.s == Matrix::identity(a.dim));
  push("i_injective", rank(e.i) == m.dim_m);
  push("j_surjective", rank(e.j) == a.dim);

  ValidationReport total = validate_compatible_algebra(e.total);
  push("total_compatible", total.passed(),
       total.first_failure() ? total.first_failure()->witness
                             : std::vector<int>{});

  // products of kernel elements vanish
  {
    bool ok = true;
    std::vector<int> wit;
    for (int p = 0; p < m.dim_m && ok; ++p)
      for (int q = 0; q < m.dim_m && ok; ++q) {
        Vec ip = e.i.apply(basis_vec(m.dim_m, p));
        Vec iq = e.i.apply(basis_vec(m.dim_m, q));
        if (!vec_is_zero(mul(e.total.mu1, ip, iq)) ||
            !vec_is_zero(mul(e.total.mu2, ip, iq))) {
          ok = false;
          wit = {p, q};
        }
      }
    push("abelian_kernel", ok, wit);
  }

  // j is multiplicative for both products
  {
    bool ok = true;
    std::vector<int> wit;
    for (int p = 0; p < db && ok; ++p)
      for (int q = 0; q < db && ok; ++q) {
        Vec xp = basis_vec(db, p), xq = basis_vec(db, q);
        Vec jp = e.j.apply(xp), jq = e.j.apply(xq);
        if (e.j.apply(mul(e.total.mu1, xp, xq)) != mul(a.mu1, jp, jq) ||
            e.j.apply(mul(e.total.mu2, xp, xq)) != mul(a.mu2, jp, jq)) {
          ok = false;
          wit = {p, q};
        }
      }
    push("j_homomorphism", ok, wit);
  }

  // actions induced through the section match m
  {
    bool ok = true;
    std::vector<int> wit;
    Matrix proj;
    try {
      proj = kernel_projection(e);
    } catch (const MathError&) {
      push("induced_actions_match", false);
      return rep;
    }
    for (int i = 0; i < a.dim && ok; ++i)
      for (int k = 0; k < m.dim_m && ok; ++k) {
        Vec sa = e.s.apply(basis_vec(a.dim, i));
        Vec ik = e.i.apply(basis_vec(m.dim_m, k));
        bool match =
            proj.apply(mul(e.total.mu1, sa, ik)) == m.act1.left_on_basis(i, k) &&
            proj.apply(mul(e.total.mu1, ik, sa)) == m.act1.right_on_basis(k, i) &&
            proj.apply(mul(e.total.mu2, sa, ik)) == m.act2.left_on_basis(i, k) &&
            proj.apply(mul(e.total.mu2, ik, sa)) == m.act2.right_on_basis(k, i);
        if (!match) {
          ok = false;
          wit = {i, k};
        }
      }
    push("induced_actions_match", ok, wit);
  }
  return rep;
}

EquivalenceResult extensions_equivalent(const CompatibleAlgebra& a,
                                        const CompatibleBimodule& m,
                                        const ExtensionDatum& e1,
                                        const ExtensionDatum& e2) {
  CompatCochain c1 = cocycle_from_extension(a, m, e1);
  CompatCochain c2 = cocycle_from_extension(a, m, e2);
  Vec diff = (c1 - c2).coords();
  Matrix d1 = delta_c_matrix(a, m, 1);
  std::optional<Vec> g = solve(d1, diff);
  EquivalenceResult res;
  res.equivalent = g.has_value();
  if (g) res.g_coords = std::move(*g);
  return res;
}

ChainMapReport phi_chain_map_check(const CompatibleAlgebra& a, int n_max) {
  if (n_max < 1) throw InputError("chain map check needs n_max >= 1");
  ChainMapReport rep;
  CompatibleBimodule adj = adjoint_bimodule(a);
  AssociativeAlgebra sum = sum_algebra(a);
  BimoduleActions sum_act = actions_from_product(sum.product);

  auto phi_matrix = [&](int n) {
    int64_t block = cochain_dim(a.dim, a.dim, n);
    Matrix p(static_cast<int>(block), static_cast<int>(n * block));
    for (int comp = 0; comp < n; ++comp)
      for (int64_t r = 0; r < block; ++r)
        p(static_cast<int>(r), static_cast<int>(comp * block + r)) =
            Rational(1);
    return p;
  };

  for (int n = 1; n <= n_max; ++n) {
    Matrix lhs = hochschild_delta(sum.product, sum_act, n) * phi_matrix(n);
    Matrix rhs = phi_matrix(n + 1) * delta_c_matrix(a, adj, n);
    rep.degrees.push_back(n);
    if (!(lhs - rhs).is_zero() && rep.all_zero) {
      rep.all_zero = false;
      rep.first_failing_degree = n;
    }
  }
  return rep;
}

}  // namespace compalg
