#include "compalg/homology.hpp"

#include <string>

#include "compalg/multilinear.hpp"

namespace compalg {

namespace {

void check_shapes(const PresimplicialPair& p) {
  if (p.dims.empty()) throw InputError("presimplicial data needs level 0");
  size_t levels = p.dims.size();
  if (p.faces1.size() != levels || p.faces2.size() != levels)
    throw InputError("face families must cover every level");
  for (size_t n = 1; n < levels; ++n)
    for (const auto* fam : {&p.faces1, &p.faces2}) {
      const std::vector<Matrix>& f = (*fam)[n];
      if (f.size() != n + 1)
        throw InputError("level " + std::to_string(n) + " needs " +
                         std::to_string(n + 1) + " face maps");
      for (const Matrix& mat : f)
        if (mat.rows() != p.dims[n - 1] || mat.cols() != p.dims[n])
          throw InputError("face map shape mismatch at level " +
                           std::to_string(n));
    }
}

int chain_dim_as_int(int64_t d) {
  if (d > 10'000'000) throw InputError("chain space too large");
  return static_cast<int>(d);
}

Matrix alternating_sum(const std::vector<Matrix>& faces) {
  Matrix out = faces[0];
  Rational sign(1);
  for (size_t i = 1; i < faces.size(); ++i) {
    sign = Rational(-1) * sign;
    out = sign == Rational(1) ? out + faces[i] : out - faces[i];
  }
  return out;
}

}  // namespace

Matrix boundary1(const PresimplicialPair& p, int n) {
  if (n < 1 || n > p.max_level()) throw InputError("boundary level out of range");
  return alternating_sum(p.faces1[n]);
}

Matrix boundary2(const PresimplicialPair& p, int n) {
  if (n < 1 || n > p.max_level()) throw InputError("boundary level out of range");
  return alternating_sum(p.faces2[n]);
}

ValidationReport validate_presimplicial_pair(const PresimplicialPair& p) {
  check_shapes(p);
  ValidationReport rep;
  CheckResult s1{"simplicial_1", true, {}, {}};
  CheckResult s2{"simplicial_2", true, {}, {}};
  CheckResult mx{"mixed", true, {}, {}};
  int top = p.max_level();
  for (int n = 2; n <= top; ++n) {
    const std::vector<Matrix>& f1n = p.faces1[n];
    const std::vector<Matrix>& f1m = p.faces1[n - 1];
    const std::vector<Matrix>& f2n = p.faces2[n];
    const std::vector<Matrix>& f2m = p.faces2[n - 1];
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        if (s1.passed && !(f1m[i] * f1n[j] == f1m[j - 1] * f1n[i])) {
          s1.passed = false;
          s1.witness = {n, i, j};
        }
        if (s2.passed && !(f2m[i] * f2n[j] == f2m[j - 1] * f2n[i])) {
          s2.passed = false;
          s2.witness = {n, i, j};
        }
        Matrix lhs = f1m[i] * f2n[j] + f2m[i] * f1n[j];
        Matrix rhs = f1m[j - 1] * f2n[i] + f2m[j - 1] * f1n[i];
        if (mx.passed && !(lhs == rhs)) {
          mx.passed = false;
          mx.witness = {n, i, j};
        }
      }
  }
  rep.checks.push_back(std::move(s1));
  rep.checks.push_back(std::move(s2));
  rep.checks.push_back(std::move(mx));

  CheckResult q1{"boundary1_squared", true, {}, {}};
  CheckResult q2{"boundary2_squared", true, {}, {}};
  CheckResult ac{"mixed_anticommute", true, {}, {}};
  for (int n = 2; n <= top; ++n) {
    Matrix d1n = boundary1(p, n), d1m = boundary1(p, n - 1);
    Matrix d2n = boundary2(p, n), d2m = boundary2(p, n - 1);
    if (q1.passed && !(d1m * d1n).is_zero()) {
      q1.passed = false;
      q1.witness = {n};
    }
    if (q2.passed && !(d2m * d2n).is_zero()) {
      q2.passed = false;
      q2.witness = {n};
    }
    if (ac.passed && !(d1m * d2n + d2m * d1n).is_zero()) {
      ac.passed = false;
      ac.witness = {n};
    }
  }
  rep.checks.push_back(std::move(q1));
  rep.checks.push_back(std::move(q2));
  rep.checks.push_back(std::move(ac));
  return rep;
}

PresimplicialPair hochschild_faces(const CompatibleAlgebra& a,
                                   const CompatibleBimodule& m, int n_max) {
  if (n_max < 0) throw InputError("negative chain level");
  int da = a.dim, dm = m.dim_m;
  PresimplicialPair p;
  p.dims.resize(n_max + 1);
  p.faces1.resize(n_max + 1);
  p.faces2.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) p.dims[n] = dm * pow_dim(da, n);

  for (int n = 1; n <= n_max; ++n) {
    int rows = chain_dim_as_int(p.dims[n - 1]);
    int cols = chain_dim_as_int(p.dims[n]);
    int64_t tuples_low = pow_dim(da, n - 1);
    for (int fam = 0; fam < 2; ++fam) {
      const BimoduleActions& act = fam == 0 ? m.act1 : m.act2;
      const BilinearMap& mu = fam == 0 ? a.mu1 : a.mu2;
      std::vector<Matrix> faces(n + 1, Matrix(rows, cols));

      std::vector<int> multi(n, 0);
      int64_t t = 0;
      if (da > 0) do {
        for (int mi = 0; mi < dm; ++mi) {
          int col = static_cast<int>(mi * pow_dim(da, n) + t);
          for (int i = 0; i <= n; ++i) {
            if (i == 0) {
              // m (x) a_1 ... -> m.a_1 (x) a_2 ...
              Vec v = act.right_on_basis(mi, multi[0]);
              int64_t rest = 0;
              for (int s = 1; s < n; ++s) rest = rest * da + multi[s];
              for (int out = 0; out < dm; ++out)
                if (!v[out].is_zero())
                  faces[i](static_cast<int>(out * tuples_low + rest), col) =
                      faces[i](static_cast<int>(out * tuples_low + rest),
                               col) +
                      v[out];
            } else if (i < n) {
              // multiply slots i and i+1 of the tensor part
              Vec v = mu.value_on_basis({multi[i - 1], multi[i]});
              for (int k = 0; k < da; ++k) {
                if (v[k].is_zero()) continue;
                int64_t rest = 0;
                for (int s = 0; s < n - 1; ++s) {
                  int slot = s < i - 1 ? multi[s] : (s == i - 1 ? k : multi[s + 1]);
                  rest = rest * da + slot;
                }
                faces[i](static_cast<int>(mi * tuples_low + rest), col) =
                    faces[i](static_cast<int>(mi * tuples_low + rest), col) +
                    v[k];
              }
            } else {
              // a_n . m (x) a_1 ... a_{n-1}
              Vec v = act.left_on_basis(multi[n - 1], mi);
              int64_t rest = 0;
              for (int s = 0; s < n - 1; ++s) rest = rest * da + multi[s];
              for (int out = 0; out < dm; ++out)
                if (!v[out].is_zero())
                  faces[i](static_cast<int>(out * tuples_low + rest), col) =
                      faces[i](static_cast<int>(out * tuples_low + rest),
                               col) +
                      v[out];
            }
          }
        }
        ++t;
      } while (next_multi(multi, da));
      (fam == 0 ? p.faces1 : p.faces2)[n] = std::move(faces);
    }
  }
  return p;
}

CompatChainComplex compat_chain_complex(const PresimplicialPair& p) {
  ValidationReport v = validate_presimplicial_pair(p);
  if (!v.passed())
    throw MathError("presimplicial identities fail: " +
                    v.first_failure()->name);
  int top = p.max_level();
  CompatChainComplex cc;
  cc.dims.resize(top + 1);
  cc.boundaries.resize(top + 1);

  int d0 = chain_dim_as_int(p.dims[0]);
  std::vector<Vec> ambient;
  for (int i = 0; i < d0; ++i) ambient.push_back(basis_vec(d0, i));
  std::vector<Vec> denom;
  if (top >= 1) denom = image_basis(boundary1(p, 1) - boundary2(p, 1));
  Subquotient sq = subquotient({d0, ambient, denom});
  cc.c0_representatives = sq.representatives;

  // projection to quotient coordinates: invert [reps | denom] columnwise
  int reps = static_cast<int>(sq.representatives.size());
  Matrix rd(d0, reps + static_cast<int>(denom.size()));
  for (int c = 0; c < rd.cols(); ++c) {
    const Vec& src = c < reps ? sq.representatives[c] : denom[c - reps];
    for (int r = 0; r < d0; ++r) rd(r, c) = src[r];
  }
  cc.c0_projection = Matrix(reps, d0);
  for (int i = 0; i < d0; ++i) {
    std::optional<Vec> z = solve(rd, basis_vec(d0, i));
    if (!z) throw MathError("degree-0 quotient basis does not span");
    for (int r = 0; r < reps; ++r) cc.c0_projection(r, i) = (*z)[r];
  }

  cc.dims[0] = reps;
  for (int n = 1; n <= top; ++n) cc.dims[n] = n * p.dims[n];
  if (top >= 1) cc.boundaries[1] = cc.c0_projection * boundary1(p, 1);
  for (int n = 2; n <= top; ++n) {
    Matrix d = boundary1(p, n);
    Matrix dp = boundary2(p, n);
    int rows = chain_dim_as_int(p.dims[n - 1]);
    int cols = chain_dim_as_int(p.dims[n]);
    Matrix b(chain_dim_as_int(cc.dims[n - 1]), chain_dim_as_int(cc.dims[n]));
    for (int blk = 0; blk + 1 < n; ++blk)
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          b(blk * rows + r, blk * cols + c) = d(r, c);
          b(blk * rows + r, (blk + 1) * cols + c) = dp(r, c);
        }
    cc.boundaries[n] = std::move(b);
  }
  for (int n = 2; n <= top; ++n)
    if (!(cc.boundaries[n - 1] * cc.boundaries[n]).is_zero())
      throw MathError("combined boundary fails to square to zero at level " +
                      std::to_string(n));
  return cc;
}

ChainComplexReport homology(const CompatibleAlgebra& a,
                            const CompatibleBimodule& m, int n_max) {
  if (n_max < 0) throw InputError("negative homology degree");
  PresimplicialPair p = hochschild_faces(a, m, n_max + 1);
  CompatChainComplex cc = compat_chain_complex(p);

  ChainComplexReport rep;
  for (int n = 0; n <= n_max; ++n) {
    HomologyDegree deg;
    deg.degree = n;
    deg.dim_chain = cc.dims[n];
    std::vector<Vec> cycles;
    if (n == 0) {
      for (int i = 0; i < cc.dims[0]; ++i)
        cycles.push_back(basis_vec(chain_dim_as_int(cc.dims[0]), i));
    } else {
      cycles = kernel_basis(cc.boundaries[n]);
    }
    std::vector<Vec> bounds = image_basis(cc.boundaries[n + 1]);
    deg.dim_cycle = static_cast<int64_t>(cycles.size());
    deg.dim_boundary = static_cast<int64_t>(bounds.size());
    Subquotient sq =
        subquotient({chain_dim_as_int(cc.dims[n]), cycles, bounds});
    deg.dim = sq.dim;
    deg.representatives = sq.representatives;
    rep.degrees.push_back(std::move(deg));
  }
  return rep;
}

KahlerReport kahler_check(const CompatibleAlgebra& a,
                          const std::optional<Vec>& sum_unit) {
  int dim = a.dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec x = basis_vec(dim, i), y = basis_vec(dim, j);
      if (!(mul(a.mu1, x, y) == mul(a.mu1, y, x)) ||
          !(mul(a.mu2, x, y) == mul(a.mu2, y, x)))
        throw MathError("differential presentation requires commutative products");
    }
  if (sum_unit) {
    if (static_cast<int>(sum_unit->size()) != dim)
      throw InputError("unit vector dimension mismatch");
    for (int i = 0; i < dim; ++i) {
      Vec e = basis_vec(dim, i);
      Vec le = vec_add(mul(a.mu1, *sum_unit, e), mul(a.mu2, *sum_unit, e));
      Vec re = vec_add(mul(a.mu1, e, *sum_unit), mul(a.mu2, e, *sum_unit));
      if (!(le == e) || !(re == e))
        throw MathError("designated element is not a unit for the sum product");
    }
  }

  CompatibleBimodule adj = adjoint_bimodule(a);
  PresimplicialPair p = hochschild_faces(a, adj, 2);
  CompatChainComplex cc = compat_chain_complex(p);
  std::vector<Vec> z1 = kernel_basis(cc.boundaries[1]);
  std::vector<Vec> b1 = image_basis(cc.boundaries[2]);
  Subquotient h1 = subquotient({chain_dim_as_int(cc.dims[1]), z1, b1});

  KahlerReport rep;
  rep.dim_h1 = h1.dim;
  rep.boundary_span = b1;

  // relation span in A (x) A coordinates, first slot major
  int dd = dim * dim;
  std::vector<Vec> rels;
  for (int ai = 0; ai < dim; ++ai)
    for (int bi = 0; bi < dim; ++bi)
      for (int ci = 0; ci < dim; ++ci) {
        Vec rel = vec_zero(dd);
        for (int fam = 0; fam < 2; ++fam) {
          const BilinearMap& mu = fam == 0 ? a.mu1 : a.mu2;
          Vec ab = mu.value_on_basis({ai, bi});
          Vec bc = mu.value_on_basis({bi, ci});
          Vec ca = mu.value_on_basis({ci, ai});
          for (int k = 0; k < dim; ++k) {
            rel[k * dim + ci] = rel[k * dim + ci] + ab[k];   // a.b (x) c
            rel[ai * dim + k] = rel[ai * dim + k] - bc[k];   // a (x) b.c
            rel[k * dim + bi] = rel[k * dim + bi] + ca[k];   // c.a (x) b
          }
        }
        if (!vec_is_zero(rel)) rels.push_back(std::move(rel));
      }
  Matrix rel_mat(dd, static_cast<int>(rels.size()));
  for (int c = 0; c < rel_mat.cols(); ++c)
    for (int r = 0; r < dd; ++r) rel_mat(r, c) = rels[c][r];
  rep.relation_span = image_basis(rel_mat);
  rep.dim_quotient = dd - static_cast<int64_t>(rep.relation_span.size());
  rep.dims_match = rep.dim_quotient == rep.dim_h1;

  // span comparison both ways through ranks
  int rank_r = static_cast<int>(rep.relation_span.size());
  int rank_b = static_cast<int>(rep.boundary_span.size());
  std::vector<Vec> both = rep.relation_span;
  both.insert(both.end(), rep.boundary_span.begin(), rep.boundary_span.end());
  Matrix both_mat(dd, static_cast<int>(both.size()));
  for (int c = 0; c < both_mat.cols(); ++c)
    for (int r = 0; r < dd; ++r) both_mat(r, c) = both[c][r];
  int rank_both = rank(both_mat);
  rep.spans_coincide = rank_both == rank_r && rank_both == rank_b;

  // left action a (x) [b (x) c] -> [(a .1 b + a .2 b) (x) c] must keep R
  Matrix span_mat(dd, rank_r);
  for (int c = 0; c < rank_r; ++c)
    for (int r = 0; r < dd; ++r) span_mat(r, c) = rep.relation_span[c][r];
  rep.action_well_defined = true;
  for (int ai = 0; ai < dim && rep.action_well_defined; ++ai)
    for (const Vec& r : rep.relation_span) {
      Vec img = vec_zero(dd);
      for (int bi = 0; bi < dim; ++bi)
        for (int ci = 0; ci < dim; ++ci) {
          const Rational& coeff = r[bi * dim + ci];
          if (coeff.is_zero()) continue;
          Vec prod = vec_add(a.mu1.value_on_basis({ai, bi}),
                             a.mu2.value_on_basis({ai, bi}));
          for (int k = 0; k < dim; ++k)
            img[k * dim + ci] = img[k * dim + ci] + coeff * prod[k];
        }
      if (!solve(span_mat, img)) {
        rep.action_well_defined = false;
        break;
      }
    }
  return rep;
}

}  // namespace compalg
