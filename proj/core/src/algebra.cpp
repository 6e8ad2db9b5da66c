#include "compalg/algebra.hpp"

#include "compalg/cohomology.hpp"

namespace compalg {

BimoduleActions::BimoduleActions(int dim_a, int dim_m)
    : dim_a_(dim_a), dim_m_(dim_m) {
  if (dim_a < 0 || dim_m < 0) throw InputError("negative action dimension");
  size_t n = static_cast<size_t>(dim_a) * dim_m * dim_m;
  l_.assign(n, Rational());
  r_.assign(n, Rational());
}

Vec BimoduleActions::left_on_basis(int a, int m) const {
  Vec v(dim_m_);
  for (int j = 0; j < dim_m_; ++j) v[j] = l(j, a, m);
  return v;
}

Vec BimoduleActions::right_on_basis(int m, int a) const {
  Vec v(dim_m_);
  for (int j = 0; j < dim_m_; ++j) v[j] = r(j, m, a);
  return v;
}

Vec BimoduleActions::left(const Vec& a, const Vec& m) const {
  if (static_cast<int>(a.size()) != dim_a_ ||
      static_cast<int>(m.size()) != dim_m_)
    throw InputError("left action argument dimension mismatch");
  Vec v(dim_m_);
  for (int i = 0; i < dim_a_; ++i) {
    if (a[i].is_zero()) continue;
    for (int k = 0; k < dim_m_; ++k) {
      if (m[k].is_zero()) continue;
      Rational w = a[i] * m[k];
      for (int j = 0; j < dim_m_; ++j)
        if (!l(j, i, k).is_zero()) v[j] += w * l(j, i, k);
    }
  }
  return v;
}

Vec BimoduleActions::right(const Vec& m, const Vec& a) const {
  if (static_cast<int>(a.size()) != dim_a_ ||
      static_cast<int>(m.size()) != dim_m_)
    throw InputError("right action argument dimension mismatch");
  Vec v(dim_m_);
  for (int k = 0; k < dim_m_; ++k) {
    if (m[k].is_zero()) continue;
    for (int i = 0; i < dim_a_; ++i) {
      if (a[i].is_zero()) continue;
      Rational w = m[k] * a[i];
      for (int j = 0; j < dim_m_; ++j)
        if (!r(j, k, i).is_zero()) v[j] += w * r(j, k, i);
    }
  }
  return v;
}

BimoduleActions BimoduleActions::operator+(const BimoduleActions& o) const {
  if (dim_a_ != o.dim_a_ || dim_m_ != o.dim_m_)
    throw InputError("action sum shape mismatch");
  BimoduleActions s = *this;
  for (size_t i = 0; i < l_.size(); ++i) s.l_[i] += o.l_[i];
  for (size_t i = 0; i < r_.size(); ++i) s.r_[i] += o.r_[i];
  return s;
}

BimoduleActions BimoduleActions::scaled(const Rational& k) const {
  BimoduleActions s = *this;
  for (Rational& x : s.l_) x *= k;
  for (Rational& x : s.r_) x *= k;
  return s;
}

bool BimoduleActions::operator==(const BimoduleActions& o) const {
  return dim_a_ == o.dim_a_ && dim_m_ == o.dim_m_ && l_ == o.l_ && r_ == o.r_;
}

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

Vec mul(const BilinearMap& mu, const Vec& a, const Vec& b) {
  return mu.value({a, b});
}

namespace {

void check_algebra_shape(const CompatibleAlgebra& a) {
  if (a.mu1.arity() != 2 || a.mu2.arity() != 2 ||
      a.mu1.dim_in() != a.dim || a.mu1.dim_out() != a.dim ||
      a.mu2.dim_in() != a.dim || a.mu2.dim_out() != a.dim)
    throw InputError("compatible algebra product shape mismatch");
}

// Runs `residual` over all basis tuples of the given arity and records the
// first failure under `name`.
template <typename F>
CheckResult scan_tuples(const std::string& name, int dim, int arity,
                        F&& residual) {
  CheckResult out{name, true, {}, {}};
  std::vector<int> t(arity, 0);
  if (dim == 0) return out;
  do {
    if (!vec_is_zero(residual(t))) {
      out.passed = false;
      out.witness = t;
      return out;
    }
  } while (next_multi(t, dim));
  return out;
}

// Same, but each tuple slot ranges over its own dimension.
template <typename F>
CheckResult scan_mixed(const std::string& name, const std::vector<int>& dims,
                       F&& residual) {
  CheckResult out{name, true, {}, {}};
  for (int d : dims)
    if (d == 0) return out;
  std::vector<int> t(dims.size(), 0);
  for (;;) {
    if (!vec_is_zero(residual(t))) {
      out.passed = false;
      out.witness = t;
      return out;
    }
    int p = static_cast<int>(t.size()) - 1;
    while (p >= 0 && ++t[p] == dims[p]) t[p--] = 0;
    if (p < 0) return out;
  }
}

CheckResult assoc_check(const std::string& name, int dim,
                        const BilinearMap& mu) {
  return scan_tuples(name, dim, 3, [&](const std::vector<int>& t) {
    Vec a = basis_vec(dim, t[0]), b = basis_vec(dim, t[1]),
        c = basis_vec(dim, t[2]);
    return vec_sub(mul(mu, mul(mu, a, b), c), mul(mu, a, mul(mu, b, c)));
  });
}

}  // namespace

ValidationReport validate_associative(const AssociativeAlgebra& a) {
  if (a.product.arity() != 2 || a.product.dim_in() != a.dim ||
      a.product.dim_out() != a.dim)
    throw InputError("associative algebra product shape mismatch");
  ValidationReport rep;
  rep.checks.push_back(assoc_check("assoc", a.dim, a.product));
  return rep;
}

ValidationReport validate_compatible_algebra(const CompatibleAlgebra& a) {
  check_algebra_shape(a);
  ValidationReport rep;
  rep.checks.push_back(assoc_check("assoc1", a.dim, a.mu1));
  rep.checks.push_back(assoc_check("assoc2", a.dim, a.mu2));
  rep.checks.push_back(
      scan_tuples("compat", a.dim, 3, [&](const std::vector<int>& t) {
        Vec x = basis_vec(a.dim, t[0]), y = basis_vec(a.dim, t[1]),
            z = basis_vec(a.dim, t[2]);
        Vec lhs = vec_add(mul(a.mu2, mul(a.mu1, x, y), z),
                          mul(a.mu1, mul(a.mu2, x, y), z));
        Vec rhs = vec_add(mul(a.mu1, x, mul(a.mu2, y, z)),
                          mul(a.mu2, x, mul(a.mu1, y, z)));
        return vec_sub(lhs, rhs);
      }));
  return rep;
}

ValidationReport validate_bimodule(const BilinearMap& mu,
                                   const BimoduleActions& act) {
  int dim = mu.dim_in();
  if (mu.arity() != 2 || mu.dim_out() != dim || act.dim_a() != dim)
    throw InputError("bimodule action shape mismatch");
  ValidationReport rep;
  int dm = act.dim_m();
  // witnesses are (a-index, a-index, m-index)
  rep.checks.push_back(scan_mixed(
      "left_assoc", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec lhs = act.left(mu.value_on_basis({t[0], t[1]}),
                           basis_vec(dm, t[2]));
        Vec rhs = act.left(basis_vec(dim, t[0]),
                           act.left_on_basis(t[1], t[2]));
        return vec_sub(lhs, rhs);
      }));
  rep.checks.push_back(scan_mixed(
      "middle_assoc", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec lhs = act.right(act.left_on_basis(t[0], t[2]),
                            basis_vec(dim, t[1]));
        Vec rhs = act.left(basis_vec(dim, t[0]),
                           act.right_on_basis(t[2], t[1]));
        return vec_sub(lhs, rhs);
      }));
  rep.checks.push_back(scan_mixed(
      "right_assoc", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec lhs = act.right(act.right_on_basis(t[2], t[0]),
                            basis_vec(dim, t[1]));
        Vec rhs = act.right(basis_vec(dm, t[2]),
                            mu.value_on_basis({t[0], t[1]}));
        return vec_sub(lhs, rhs);
      }));
  return rep;
}

ValidationReport validate_compatible_bimodule(const CompatibleAlgebra& a,
                                              const CompatibleBimodule& m) {
  check_algebra_shape(a);
  if (m.act1.dim_a() != a.dim || m.act2.dim_a() != a.dim ||
      m.act1.dim_m() != m.dim_m || m.act2.dim_m() != m.dim_m)
    throw InputError("compatible bimodule shape mismatch");
  ValidationReport rep;
  auto append = [&rep](ValidationReport sub, const std::string& prefix) {
    for (CheckResult& c : sub.checks) {
      c.name = prefix + "_" + c.name;
      rep.checks.push_back(std::move(c));
    }
  };
  append(validate_bimodule(a.mu1, m.act1), "bimod1");
  append(validate_bimodule(a.mu2, m.act2), "bimod2");

  int dim = a.dim, dm = m.dim_m;
  const BimoduleActions& A1 = m.act1;
  const BimoduleActions& A2 = m.act2;
  // (a.1 b).2 m + (a.2 b).1 m = a.1 (b.2 m) + a.2 (b.1 m)
  rep.checks.push_back(scan_mixed(
      "compat_ll", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec ea = basis_vec(dim, t[0]);
        Vec em = basis_vec(dm, t[2]);
        Vec lhs = vec_add(A2.left(a.mu1.value_on_basis({t[0], t[1]}), em),
                          A1.left(a.mu2.value_on_basis({t[0], t[1]}), em));
        Vec rhs = vec_add(A1.left(ea, A2.left_on_basis(t[1], t[2])),
                          A2.left(ea, A1.left_on_basis(t[1], t[2])));
        return vec_sub(lhs, rhs);
      }));
  // (a.1 m).2 b + (a.2 m).1 b = a.1 (m.2 b) + a.2 (m.1 b)
  rep.checks.push_back(scan_mixed(
      "compat_lr", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec ea = basis_vec(dim, t[0]), eb = basis_vec(dim, t[1]);
        Vec lhs = vec_add(A2.right(A1.left_on_basis(t[0], t[2]), eb),
                          A1.right(A2.left_on_basis(t[0], t[2]), eb));
        Vec rhs = vec_add(A1.left(ea, A2.right_on_basis(t[2], t[1])),
                          A2.left(ea, A1.right_on_basis(t[2], t[1])));
        return vec_sub(lhs, rhs);
      }));
  // (m.1 a).2 b + (m.2 a).1 b = m.1 (a.2 b) + m.2 (a.1 b)
  rep.checks.push_back(scan_mixed(
      "compat_rr", {dim, dim, dm}, [&](const std::vector<int>& t) {
        Vec em = basis_vec(dm, t[2]), eb = basis_vec(dim, t[1]);
        Vec lhs = vec_add(A2.right(A1.right_on_basis(t[2], t[0]), eb),
                          A1.right(A2.right_on_basis(t[2], t[0]), eb));
        Vec rhs = vec_add(A1.right(em, a.mu2.value_on_basis({t[0], t[1]})),
                          A2.right(em, a.mu1.value_on_basis({t[0], t[1]})));
        return vec_sub(lhs, rhs);
      }));
  return rep;
}

BimoduleActions actions_from_product(const BilinearMap& mu) {
  int dim = mu.dim_in();
  BimoduleActions act(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j) {
        act.l(j, i, k) = mu.at(j, {i, k});
        act.r(j, k, i) = mu.at(j, {k, i});
      }
  return act;
}

CompatibleBimodule adjoint_bimodule(const CompatibleAlgebra& a) {
  check_algebra_shape(a);
  return CompatibleBimodule{a.dim, actions_from_product(a.mu1),
                            actions_from_product(a.mu2)};
}

CompatibleBimodule dual_bimodule(const CompatibleBimodule& m) {
  auto dualize = [](const BimoduleActions& act) {
    BimoduleActions d(act.dim_a(), act.dim_m());
    for (int j = 0; j < act.dim_m(); ++j)
      for (int i = 0; i < act.dim_a(); ++i)
        for (int k = 0; k < act.dim_m(); ++k) {
          d.l(j, i, k) = act.r(k, j, i);
          d.r(j, k, i) = act.l(k, i, j);
        }
    return d;
  };
  return CompatibleBimodule{m.dim_m, dualize(m.act1), dualize(m.act2)};
}

BilinearMap semidirect_product_map(const BilinearMap& mu,
                                   const BimoduleActions& act,
                                   const BilinearMap* twist) {
  int da = mu.dim_in(), dm = act.dim_m();
  int d = da + dm;
  BilinearMap out = make_bilinear(d, d);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < da; ++k) out.at(k, {i, j}) = mu.at(k, {i, j});
      if (twist)
        for (int k = 0; k < dm; ++k)
          out.at(da + k, {i, j}) = twist->at(k, {i, j});
    }
  for (int i = 0; i < da; ++i)
    for (int n = 0; n < dm; ++n)
      for (int k = 0; k < dm; ++k) {
        out.at(da + k, {i, da + n}) = act.l(k, i, n);
        out.at(da + k, {da + n, i}) = act.r(k, n, i);
      }
  return out;
}

CompatibleAlgebra semidirect_product(const CompatibleAlgebra& a,
                                     const CompatibleBimodule& m) {
  check_algebra_shape(a);
  return CompatibleAlgebra{
      a.dim + m.dim_m,
      semidirect_product_map(a.mu1, m.act1, nullptr),
      semidirect_product_map(a.mu2, m.act2, nullptr)};
}

CompatibleAlgebra twisted_pair(const AssociativeAlgebra& a,
                               const BimoduleActions& act,
                               const BilinearMap& f) {
  if (f.arity() != 2 || f.dim_in() != a.dim || f.dim_out() != act.dim_m())
    throw InputError("twist cochain shape mismatch");
  Cochain df = hochschild_delta_cochain(a.product, act, f);
  if (!df.is_zero())
    throw MathError("twist is not a Hochschild 2-cocycle");
  return CompatibleAlgebra{
      a.dim + act.dim_m(),
      semidirect_product_map(a.product, act, nullptr),
      semidirect_product_map(a.product, act, &f)};
}

AssociativeAlgebra sum_algebra(const CompatibleAlgebra& a, const Rational& k,
                               const Rational& l) {
  check_algebra_shape(a);
  return AssociativeAlgebra{a.dim, a.mu1.scaled(k) + a.mu2.scaled(l)};
}

BimoduleActions sum_bimodule(const CompatibleBimodule& m, const Rational& k,
                             const Rational& l) {
  return m.act1.scaled(k) + m.act2.scaled(l);
}

}  // namespace compalg
