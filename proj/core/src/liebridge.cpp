#include "compalg/liebridge.hpp"

#include <algorithm>
#include <string>

namespace compalg {

namespace {

void check_lie_shapes(const CompatibleLieAlgebra& g) {
  for (const BilinearMap* b : {&g.b1, &g.b2})
    if (b->arity() != 2 || b->dim_in() != g.dim || b->dim_out() != g.dim)
      throw InputError("bracket shape mismatch");
}

void check_rep_shapes(const CompatibleLieAlgebra& g,
                      const CompatibleLieRep& v) {
  check_lie_shapes(g);
  for (const std::vector<Matrix>* rho : {&v.rho1, &v.rho2}) {
    if (static_cast<int>(rho->size()) != g.dim)
      throw InputError("one action matrix per basis element is required");
    for (const Matrix& m : *rho)
      if (m.rows() != v.dim_v || m.cols() != v.dim_v)
        throw InputError("action matrix shape mismatch");
  }
}

// sorts the tuple in place; returns 0 on repeated entries, else the sign
int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

}  // namespace

int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

bool next_increasing(std::vector<int>& multi, int dim) {
  int n = static_cast<int>(multi.size());
  for (int s = n - 1; s >= 0; --s) {
    if (multi[s] < dim - (n - s)) {
      ++multi[s];
      for (int t = s + 1; t < n; ++t) multi[t] = multi[t - 1] + 1;
      return true;
    }
  }
  return false;
}

int64_t increasing_rank(const std::vector<int>& multi, int dim) {
  int n = static_cast<int>(multi.size());
  int64_t r = 0;
  int prev = -1;
  for (int s = 0; s < n; ++s) {
    for (int t = prev + 1; t < multi[s]; ++t) r += binom(dim - 1 - t, n - 1 - s);
    prev = multi[s];
  }
  return r;
}

LieCochain::LieCochain(int arity, int dim_g, int dim_v)
    : arity_(arity), dim_g_(dim_g), dim_v_(dim_v) {
  if (arity < 0 || dim_g < 0 || dim_v < 0)
    throw InputError("negative cochain shape");
  tuples_ = binom(dim_g, arity);
  c_.assign(static_cast<size_t>(dim_v) * tuples_, Rational(0));
}

Rational& LieCochain::at(int out, const std::vector<int>& inc_multi) {
  return c_[static_cast<size_t>(out) * tuples_ +
            increasing_rank(inc_multi, dim_g_)];
}

const Rational& LieCochain::at(int out,
                               const std::vector<int>& inc_multi) const {
  return c_[static_cast<size_t>(out) * tuples_ +
            increasing_rank(inc_multi, dim_g_)];
}

Vec LieCochain::value_on_basis(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != arity_)
    throw InputError("tuple length mismatch");
  std::vector<int> sorted = multi;
  int sign = sort_sign(sorted);
  Vec v = vec_zero(dim_v_);
  if (sign == 0) return v;
  int64_t r = increasing_rank(sorted, dim_g_);
  for (int out = 0; out < dim_v_; ++out) {
    const Rational& c = c_[static_cast<size_t>(out) * tuples_ + r];
    v[out] = sign == 1 ? c : Rational(0) - c;
  }
  return v;
}

LieCochain LieCochain::from_coords(int arity, int dim_g, int dim_v,
                                   Vec coords) {
  LieCochain f(arity, dim_g, dim_v);
  if (coords.size() != f.c_.size())
    throw InputError("coordinate length mismatch");
  f.c_ = std::move(coords);
  return f;
}

LieCochain LieCochain::operator+(const LieCochain& o) const {
  if (arity_ != o.arity_ || dim_g_ != o.dim_g_ || dim_v_ != o.dim_v_)
    throw InputError("cochain shape mismatch");
  LieCochain f = *this;
  for (size_t i = 0; i < c_.size(); ++i) f.c_[i] = c_[i] + o.c_[i];
  return f;
}

LieCochain LieCochain::operator-(const LieCochain& o) const {
  if (arity_ != o.arity_ || dim_g_ != o.dim_g_ || dim_v_ != o.dim_v_)
    throw InputError("cochain shape mismatch");
  LieCochain f = *this;
  for (size_t i = 0; i < c_.size(); ++i) f.c_[i] = c_[i] - o.c_[i];
  return f;
}

LieCochain LieCochain::scaled(const Rational& k) const {
  LieCochain f = *this;
  for (Rational& c : f.c_) c = c * k;
  return f;
}

bool LieCochain::operator==(const LieCochain& o) const {
  return arity_ == o.arity_ && dim_g_ == o.dim_g_ && dim_v_ == o.dim_v_ &&
         c_ == o.c_;
}

ValidationReport validate_compatible_lie(const CompatibleLieAlgebra& g) {
  check_lie_shapes(g);
  ValidationReport rep;
  for (int which = 0; which < 2; ++which) {
    const BilinearMap& b = which == 0 ? g.b1 : g.b2;
    CheckResult sk{which == 0 ? "skew_1" : "skew_2", true, {}, {}};
    for (int i = 0; i < g.dim && sk.passed; ++i)
      for (int j = 0; j < g.dim && sk.passed; ++j) {
        Vec lhs = b.value_on_basis({i, j});
        Vec rhs = vec_scale(Q(-1), b.value_on_basis({j, i}));
        if (!(lhs == rhs)) {
          sk.passed = false;
          sk.witness = {i, j};
        }
      }
    rep.checks.push_back(std::move(sk));
    CheckResult jc{which == 0 ? "jacobi_1" : "jacobi_2", true, {}, {}};
    for (int i = 0; i < g.dim && jc.passed; ++i)
      for (int j = 0; j < g.dim && jc.passed; ++j)
        for (int k = 0; k < g.dim && jc.passed; ++k) {
          Vec x = basis_vec(g.dim, i), y = basis_vec(g.dim, j),
              z = basis_vec(g.dim, k);
          Vec sum = vec_add(
              vec_add(mul(b, mul(b, x, y), z), mul(b, mul(b, y, z), x)),
              mul(b, mul(b, z, x), y));
          if (!vec_is_zero(sum)) {
            jc.passed = false;
            jc.witness = {i, j, k};
          }
        }
    rep.checks.push_back(std::move(jc));
  }
  CheckResult mx{"mixed_six_term", true, {}, {}};
  for (int i = 0; i < g.dim && mx.passed; ++i)
    for (int j = 0; j < g.dim && mx.passed; ++j)
      for (int k = 0; k < g.dim && mx.passed; ++k) {
        Vec x = basis_vec(g.dim, i), y = basis_vec(g.dim, j),
            z = basis_vec(g.dim, k);
        Vec sum = vec_zero(g.dim);
        sum = vec_add(sum, mul(g.b2, x, mul(g.b1, y, z)));
        sum = vec_add(sum, mul(g.b2, y, mul(g.b1, z, x)));
        sum = vec_add(sum, mul(g.b2, z, mul(g.b1, x, y)));
        sum = vec_add(sum, mul(g.b1, x, mul(g.b2, y, z)));
        sum = vec_add(sum, mul(g.b1, y, mul(g.b2, z, x)));
        sum = vec_add(sum, mul(g.b1, z, mul(g.b2, x, y)));
        if (!vec_is_zero(sum)) {
          mx.passed = false;
          mx.witness = {i, j, k};
        }
      }
  rep.checks.push_back(std::move(mx));
  return rep;
}

Matrix rho_apply(const std::vector<Matrix>& rho, const Vec& x) {
  if (rho.empty()) {
    if (!vec_is_zero(x)) throw InputError("action list is empty");
    return Matrix(0, 0);
  }
  Matrix out(rho[0].rows(), rho[0].cols());
  for (size_t i = 0; i < rho.size(); ++i)
    for (int r = 0; r < out.rows(); ++r)
      for (int c = 0; c < out.cols(); ++c)
        out(r, c) = out(r, c) + x[i] * rho[i](r, c);
  return out;
}

ValidationReport validate_lie_rep(const CompatibleLieAlgebra& g,
                                  const CompatibleLieRep& v) {
  check_rep_shapes(g, v);
  ValidationReport rep;
  for (int which = 0; which < 2; ++which) {
    const BilinearMap& b = which == 0 ? g.b1 : g.b2;
    const std::vector<Matrix>& rho = which == 0 ? v.rho1 : v.rho2;
    CheckResult c{which == 0 ? "rep_1" : "rep_2", true, {}, {}};
    for (int i = 0; i < g.dim && c.passed; ++i)
      for (int j = 0; j < g.dim && c.passed; ++j) {
        Matrix lhs = rho_apply(rho, b.value_on_basis({i, j}));
        Matrix rhs = rho[i] * rho[j] - rho[j] * rho[i];
        if (!(lhs == rhs)) {
          c.passed = false;
          c.witness = {i, j};
        }
      }
    rep.checks.push_back(std::move(c));
  }
  CheckResult mx{"rep_mixed", true, {}, {}};
  for (int i = 0; i < g.dim && mx.passed; ++i)
    for (int j = 0; j < g.dim && mx.passed; ++j) {
      Matrix lhs = rho_apply(v.rho2, g.b1.value_on_basis({i, j})) +
                   rho_apply(v.rho1, g.b2.value_on_basis({i, j}));
      Matrix rhs = v.rho1[i] * v.rho2[j] - v.rho1[j] * v.rho2[i] +
                   v.rho2[i] * v.rho1[j] - v.rho2[j] * v.rho1[i];
      if (!(lhs == rhs)) {
        mx.passed = false;
        mx.witness = {i, j};
      }
    }
  rep.checks.push_back(std::move(mx));
  return rep;
}

CompatibleLieAlgebra skew_symmetrize_algebra(const CompatibleAlgebra& a) {
  CompatibleLieAlgebra g;
  g.dim = a.dim;
  g.b1 = make_bilinear(a.dim, a.dim);
  g.b2 = make_bilinear(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec c1 = vec_sub(a.mu1.value_on_basis({i, j}),
                       a.mu1.value_on_basis({j, i}));
      Vec c2 = vec_sub(a.mu2.value_on_basis({i, j}),
                       a.mu2.value_on_basis({j, i}));
      for (int k = 0; k < a.dim; ++k) {
        g.b1.at(k, {i, j}) = c1[k];
        g.b2.at(k, {i, j}) = c2[k];
      }
    }
  return g;
}

CompatibleLieRep skew_symmetrize_bimodule(const CompatibleAlgebra& a,
                                          const CompatibleBimodule& m) {
  CompatibleLieRep v;
  v.dim_v = m.dim_m;
  for (int which = 0; which < 2; ++which) {
    const BimoduleActions& act = which == 0 ? m.act1 : m.act2;
    std::vector<Matrix>& rho = which == 0 ? v.rho1 : v.rho2;
    for (int i = 0; i < a.dim; ++i) {
      Matrix r(m.dim_m, m.dim_m);
      for (int mm = 0; mm < m.dim_m; ++mm) {
        Vec col = vec_sub(act.left_on_basis(i, mm), act.right_on_basis(mm, i));
        for (int out = 0; out < m.dim_m; ++out) r(out, mm) = col[out];
      }
      rho.push_back(std::move(r));
    }
  }
  return v;
}

LieCochain ce_delta_cochain(const BilinearMap& bracket,
                            const std::vector<Matrix>& rho,
                            const LieCochain& f) {
  int dg = f.dim_g(), dv = f.dim_v();
  if (bracket.arity() != 2 || bracket.dim_in() != dg ||
      bracket.dim_out() != dg)
    throw InputError("bracket shape mismatch");
  if (static_cast<int>(rho.size()) != dg)
    throw InputError("one action matrix per basis element is required");
  int n = f.arity();
  LieCochain out(n + 1, dg, dv);
  if (binom(dg, n + 1) == 0) return out;

  std::vector<int> target(n + 1);
  for (int s = 0; s <= n; ++s) target[s] = s;
  do {
    Vec acc = vec_zero(dv);
    for (int q = 0; q <= n; ++q) {
      std::vector<int> sub;
      sub.reserve(n);
      for (int s = 0; s <= n; ++s)
        if (s != q) sub.push_back(target[s]);
      Vec val = rho[target[q]].apply(f.value_on_basis(sub));
      acc = q % 2 == 0 ? vec_add(acc, val) : vec_sub(acc, val);
    }
    for (int q = 0; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r) {
        Vec br = bracket.value_on_basis({target[q], target[r]});
        std::vector<int> rest;
        rest.reserve(n);
        rest.push_back(0);  // placeholder for the bracket slot
        for (int s = 0; s <= n; ++s)
          if (s != q && s != r) rest.push_back(target[s]);
        // 1-based sign (-1)^{(q+1)+(r+1)} = (-1)^{q+r}
        bool negative = (q + r) % 2 != 0;
        for (int k = 0; k < dg; ++k) {
          if (br[k].is_zero()) continue;
          rest[0] = k;
          Vec val = vec_scale(br[k], f.value_on_basis(rest));
          acc = negative ? vec_sub(acc, val) : vec_add(acc, val);
        }
      }
    for (int o = 0; o < dv; ++o) out.at(o, target) = acc[o];
  } while (next_increasing(target, dg));
  return out;
}

Matrix ce_delta(const BilinearMap& bracket, const std::vector<Matrix>& rho,
                int dim_v, int n) {
  int dg = bracket.dim_in();
  int64_t dom = dim_v * binom(dg, n);
  int64_t cod = dim_v * binom(dg, n + 1);
  Matrix d(static_cast<int>(cod), static_cast<int>(dom));
  for (int64_t c = 0; c < dom; ++c) {
    Vec e = vec_zero(static_cast<int>(dom));
    e[c] = Rational(1);
    LieCochain f = LieCochain::from_coords(n, dg, dim_v, e);
    Vec img = ce_delta_cochain(bracket, rho, f).coords();
    for (int64_t r = 0; r < cod; ++r)
      d(static_cast<int>(r), static_cast<int>(c)) = img[r];
  }
  return d;
}

std::vector<Vec> lie_c0_basis(const CompatibleLieAlgebra& g,
                              const CompatibleLieRep& v) {
  check_rep_shapes(g, v);
  Matrix cond(g.dim * v.dim_v, v.dim_v);
  for (int i = 0; i < g.dim; ++i) {
    Matrix diff = v.rho1[i] - v.rho2[i];
    for (int k = 0; k < v.dim_v; ++k)
      for (int mm = 0; mm < v.dim_v; ++mm)
        cond(i * v.dim_v + k, mm) = diff(k, mm);
  }
  return kernel_basis(cond);
}

Matrix lie_delta_c_matrix(const CompatibleLieAlgebra& g,
                          const CompatibleLieRep& v, int n) {
  check_rep_shapes(g, v);
  if (n < 0) throw InputError("negative degree");
  if (n == 0) {
    std::vector<Vec> basis = lie_c0_basis(g, v);
    int64_t cod = v.dim_v * binom(g.dim, 1);
    Matrix d(static_cast<int>(cod), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
      for (int out = 0; out < v.dim_v; ++out)
        for (int x = 0; x < g.dim; ++x)
          d(out * g.dim + x, static_cast<int>(c)) =
              v.rho1[x].apply(basis[c])[out];
    return d;
  }
  Matrix d1 = ce_delta(g.b1, v.rho1, v.dim_v, n);
  Matrix d2 = ce_delta(g.b2, v.rho2, v.dim_v, n);
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

CochainComplexReport lie_cohomology(const CompatibleLieAlgebra& g,
                                    const CompatibleLieRep& v, int n_max) {
  if (n_max < 0) throw InputError("negative degree bound");
  CochainComplexReport rep;
  std::vector<Vec> c0 = lie_c0_basis(g, v);
  Matrix d_prev = lie_delta_c_matrix(g, v, 0);
  {
    DegreeReport deg0;
    deg0.degree = 0;
    deg0.dim_cochain = static_cast<int64_t>(c0.size());
    std::vector<Vec> z0 = kernel_basis(d_prev);
    deg0.dim_cocycle = static_cast<int64_t>(z0.size());
    deg0.dim_coboundary = 0;
    deg0.dim = deg0.dim_cocycle;
    for (const Vec& k : z0) {
      Vec w = vec_zero(v.dim_v);
      for (size_t j = 0; j < c0.size(); ++j)
        w = vec_add(w, vec_scale(k[j], c0[j]));
      deg0.representatives.push_back(std::move(w));
    }
    rep.degrees.push_back(std::move(deg0));
  }
  for (int n = 1; n <= n_max; ++n) {
    Matrix dn = lie_delta_c_matrix(g, v, n);
    DegreeReport deg;
    deg.degree = n;
    deg.dim_cochain = dn.cols();
    std::vector<Vec> z = kernel_basis(dn);
    std::vector<Vec> b = image_basis(d_prev);
    deg.dim_cocycle = static_cast<int64_t>(z.size());
    deg.dim_coboundary = static_cast<int64_t>(b.size());
    Subquotient sq = subquotient({dn.cols(), z, b});
    deg.dim = sq.dim;
    deg.representatives = sq.representatives;
    rep.degrees.push_back(std::move(deg));
    d_prev = std::move(dn);
  }
  return rep;
}

Matrix alternation_matrix(int dim_g, int dim_v, int n) {
  int64_t rows = dim_v * binom(dim_g, n);
  int64_t cols = dim_v * pow_dim(dim_g, n);
  Matrix phi(static_cast<int>(rows), static_cast<int>(cols));
  if (n == 0) {
    for (int o = 0; o < dim_v; ++o) phi(o, o) = Rational(1);
    return phi;
  }
  int64_t inc_count = binom(dim_g, n);
  int64_t tuple_count = pow_dim(dim_g, n);
  std::vector<int> inc(n);
  for (int s = 0; s < n; ++s) inc[s] = s;
  if (dim_g < n) return phi;  // no increasing tuples
  int64_t ri = 0;
  do {
    std::vector<int> perm(n);
    for (int s = 0; s < n; ++s) perm[s] = s;
    do {
      int sign = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      int64_t flat = 0;
      for (int s = 0; s < n; ++s) flat = flat * dim_g + inc[perm[s]];
      for (int o = 0; o < dim_v; ++o)
        phi(static_cast<int>(o * inc_count + ri),
            static_cast<int>(o * tuple_count + flat)) = Rational(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ++ri;
  } while (next_increasing(inc, dim_g));
  return phi;
}

namespace {

Matrix block_diagonal(const Matrix& b, int copies) {
  Matrix out(b.rows() * copies, b.cols() * copies);
  for (int k = 0; k < copies; ++k)
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c)
        if (!b(r, c).is_zero()) out(k * b.rows() + r, k * b.cols() + c) = b(r, c);
  return out;
}

}  // namespace

ChainMapReport phi_skew_chain_map(const CompatibleAlgebra& a,
                                  const CompatibleBimodule& m, int n_max) {
  CompatibleLieAlgebra lie = skew_symmetrize_algebra(a);
  CompatibleLieRep rep = skew_symmetrize_bimodule(a, m);
  ChainMapReport out;
  for (int n = 0; n <= n_max; ++n) {
    out.degrees.push_back(n);
    bool ok;
    if (n == 0) {
      // the two degree-0 subspaces carry identical kernel bases, making
      // the diagram over the inclusion a direct matrix comparison
      ok = lie_c0_basis(lie, rep) == c0c_basis(a, m);
      if (ok) {
        Matrix lhs = lie_delta_c_matrix(lie, rep, 0);
        Matrix rhs = alternation_matrix(a.dim, m.dim_m, 1) *
                     delta_c_matrix(a, m, 0);
        ok = lhs == rhs;
      }
    } else {
      Matrix phi_n = block_diagonal(alternation_matrix(a.dim, m.dim_m, n), n);
      Matrix phi_n1 =
          block_diagonal(alternation_matrix(a.dim, m.dim_m, n + 1), n + 1);
      Matrix lhs = lie_delta_c_matrix(lie, rep, n) * phi_n;
      Matrix rhs = phi_n1 * delta_c_matrix(a, m, n);
      ok = lhs == rhs;
    }
    if (!ok && out.all_zero) {
      out.all_zero = false;
      out.first_failing_degree = n;
    }
  }
  return out;
}

}  // namespace compalg
