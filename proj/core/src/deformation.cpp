#include "compalg/deformation.hpp"

#include <string>

namespace compalg {

namespace {

// Truncated series of square matrices, coefficient k at index k.
using MatSeries = std::vector<Matrix>;

MatSeries series_zero(int dim, int order) {
  return MatSeries(order + 1, Matrix(dim, dim));
}

MatSeries series_mul(const MatSeries& a, const MatSeries& b) {
  int order = static_cast<int>(a.size()) - 1;
  int dim = a[0].rows();
  MatSeries c = series_zero(dim, order);
  for (int k = 0; k <= order; ++k)
    for (int i = 0; i <= k; ++i) c[k] = c[k] + a[i] * b[k - i];
  return c;
}

MatSeries series_sub(const MatSeries& a, const MatSeries& b) {
  MatSeries c = a;
  for (size_t k = 0; k < c.size(); ++k) c[k] = c[k] - b[k];
  return c;
}

// Inverse of a series with identity leading term, by Newton iteration:
// each step doubles the number of correct orders.
MatSeries series_inverse(const MatSeries& a) {
  int order = static_cast<int>(a.size()) - 1;
  int dim = a[0].rows();
  MatSeries x = series_zero(dim, order);
  x[0] = Matrix::identity(dim);
  MatSeries two_id = series_zero(dim, order);
  two_id[0] = Matrix::identity(dim) + Matrix::identity(dim);
  for (int correct = 1; correct <= order; correct *= 2)
    x = series_mul(x, series_sub(two_id, series_mul(a, x)));
  return x;
}

std::string order_name(int k, const char* family) {
  return "order_" + std::to_string(k) + "_" + family;
}

// Direct evaluation of one order-k deformation equation family on all
// basis triples. Families: 0 and 2 are the associativity sums for mu1 and
// mu2, 1 is the mixed compatibility sum.
CheckResult raw_family(const TruncatedDeformation& d, int k, int family) {
  static const char* names[3] = {"raw_mu1", "raw_mixed", "raw_mu2"};
  CheckResult c{order_name(k, names[family]), true, {}, {}};
  int dim = d.base.dim;
  int n = d.order;
  for (int xi = 0; xi < dim; ++xi)
    for (int yi = 0; yi < dim; ++yi)
      for (int zi = 0; zi < dim; ++zi) {
        Vec x = basis_vec(dim, xi), y = basis_vec(dim, yi),
            z = basis_vec(dim, zi);
        Vec acc = vec_zero(dim);
        for (int i = 0; i <= k; ++i) {
          int j = k - i;
          if (i > n || j > n) continue;
          const BilinearMap& m1i = d.mu1_terms[i];
          const BilinearMap& m2i = d.mu2_terms[i];
          const BilinearMap& m1j = d.mu1_terms[j];
          const BilinearMap& m2j = d.mu2_terms[j];
          if (family == 0) {
            acc = vec_add(acc, vec_sub(mul(m1i, mul(m1j, x, y), z),
                                       mul(m1i, x, mul(m1j, y, z))));
          } else if (family == 2) {
            acc = vec_add(acc, vec_sub(mul(m2i, mul(m2j, x, y), z),
                                       mul(m2i, x, mul(m2j, y, z))));
          } else {
            acc = vec_add(acc, mul(m2i, mul(m1j, x, y), z));
            acc = vec_add(acc, mul(m1i, mul(m2j, x, y), z));
            acc = vec_sub(acc, mul(m1i, x, mul(m2j, y, z)));
            acc = vec_sub(acc, mul(m2i, x, mul(m1j, y, z)));
          }
        }
        if (!vec_is_zero(acc)) {
          c.passed = false;
          c.witness = {k, xi, yi, zi};
          return c;
        }
      }
  return c;
}

Matrix operator_from_c1_coords(int dim, const Vec& coords) {
  Matrix m(dim, dim);
  for (int out = 0; out < dim; ++out)
    for (int in = 0; in < dim; ++in) m(out, in) = coords[out * dim + in];
  return m;
}

}  // namespace

CompatCochain TruncatedDeformation::theta(int k) const {
  return CompatCochain({mu1_terms.at(k), mu2_terms.at(k)});
}

TruncatedDeformation undeformed(const CompatibleAlgebra& a, int order) {
  if (order < 1) throw InputError("deformation order must be at least 1");
  TruncatedDeformation d;
  d.base = a;
  d.order = order;
  d.mu1_terms.push_back(a.mu1);
  d.mu2_terms.push_back(a.mu2);
  for (int k = 1; k <= order; ++k) {
    d.mu1_terms.push_back(make_bilinear(a.dim, a.dim));
    d.mu2_terms.push_back(make_bilinear(a.dim, a.dim));
  }
  return d;
}

GaugeSeries GaugeSeries::identity(int dim, int order) {
  GaugeSeries g;
  g.order = order;
  g.terms.assign(order + 1, Matrix(dim, dim));
  g.terms[0] = Matrix::identity(dim);
  return g;
}

void check_deformation_shape(const TruncatedDeformation& d) {
  if (d.order < 1) throw InputError("deformation order must be at least 1");
  size_t want = static_cast<size_t>(d.order) + 1;
  if (d.mu1_terms.size() != want || d.mu2_terms.size() != want)
    throw InputError("deformation must carry terms for every order 0..N");
  for (const auto* terms : {&d.mu1_terms, &d.mu2_terms})
    for (const BilinearMap& t : *terms)
      if (t.arity() != 2 || t.dim_in() != d.base.dim ||
          t.dim_out() != d.base.dim)
        throw InputError("deformation term shape mismatch");
  if (!(d.mu1_terms[0] == d.base.mu1) || !(d.mu2_terms[0] == d.base.mu2))
    throw InputError("order-0 terms must equal the base products");
}

void check_gauge_shape(const GaugeSeries& g, int dim) {
  if (g.order < 1) throw InputError("gauge order must be at least 1");
  if (g.terms.size() != static_cast<size_t>(g.order) + 1)
    throw InputError("gauge must carry terms for every order 0..N");
  for (const Matrix& t : g.terms)
    if (t.rows() != dim || t.cols() != dim)
      throw InputError("gauge term shape mismatch");
  if (!(g.terms[0] == Matrix::identity(dim)))
    throw InputError("leading gauge term must be the identity");
}

DeformationReport validate_deformation(const TruncatedDeformation& d) {
  check_deformation_shape(d);
  DeformationReport rep;
  rep.valid = true;
  int dim = d.base.dim;
  for (int k = 0; k <= d.order; ++k) {
    bool order_ok = true;
    for (int family = 0; family < 3; ++family) {
      CheckResult c = raw_family(d, k, family);
      order_ok = order_ok && c.passed;
      rep.details.checks.push_back(std::move(c));
    }
    CompatCochain sum = CompatCochain::zero(3, dim, dim);
    for (int i = 0; i <= k; ++i) {
      int j = k - i;
      if (i > d.order || j > d.order) continue;
      sum = sum + compat_bracket(d.theta(i), d.theta(j));
    }
    CheckResult cb{order_name(k, "bracket"), sum.is_zero(), {k}, {}};
    order_ok = order_ok && cb.passed;
    rep.details.checks.push_back(std::move(cb));
    if (!order_ok && rep.first_failing_order < 0) {
      rep.first_failing_order = k;
      rep.valid = false;
    }
  }
  return rep;
}

InfinitesimalResult infinitesimal(const TruncatedDeformation& d) {
  DeformationReport v = validate_deformation(d);
  if (!v.valid)
    throw MathError("deformation equations fail at order " +
                    std::to_string(v.first_failing_order));
  int dim = d.base.dim;
  InfinitesimalResult res;
  res.pair = CompatCochain::zero(2, dim, dim);
  for (int p = 1; p <= d.order; ++p) {
    CompatCochain tp = d.theta(p);
    if (!tp.is_zero()) {
      res.leading_order = p;
      res.pair = tp;
      CompatibleBimodule adj = adjoint_bimodule(d.base);
      res.is_cocycle = delta_c_tuple(d.base, adj, tp).is_zero();
      return res;
    }
  }
  res.undeformed = true;
  res.is_cocycle = true;
  return res;
}

TruncatedDeformation apply_gauge(const TruncatedDeformation& d,
                                 const GaugeSeries& g) {
  check_deformation_shape(d);
  if (g.order != d.order)
    throw InputError("gauge order must match the deformation order");
  int dim = d.base.dim;
  check_gauge_shape(g, dim);
  const MatSeries& phi = g.terms;
  MatSeries psi = series_inverse(phi);

  TruncatedDeformation out;
  out.base = d.base;
  out.order = d.order;
  for (int which = 0; which < 2; ++which) {
    const std::vector<BilinearMap>& terms =
        which == 0 ? d.mu1_terms : d.mu2_terms;
    std::vector<BilinearMap> res;
    for (int k = 0; k <= d.order; ++k) {
      BilinearMap t = make_bilinear(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          Vec acc = vec_zero(dim);
          for (int q = 0; q <= k; ++q)
            for (int r = 0; q + r <= k; ++r)
              for (int s = 0; q + r + s <= k; ++s) {
                int p = k - q - r - s;
                Vec inner = mul(terms[q], phi[r].apply(basis_vec(dim, i)),
                                phi[s].apply(basis_vec(dim, j)));
                acc = vec_add(acc, psi[p].apply(inner));
              }
          for (int o = 0; o < dim; ++o) t.at(o, {i, j}) = acc[o];
        }
      res.push_back(std::move(t));
    }
    (which == 0 ? out.mu1_terms : out.mu2_terms) = std::move(res);
  }
  return out;
}

GaugeSeries gauge_inverse(const GaugeSeries& g) {
  if (g.terms.empty()) throw InputError("empty gauge series");
  check_gauge_shape(g, g.terms[0].rows());
  GaugeSeries out;
  out.order = g.order;
  out.terms = series_inverse(g.terms);
  return out;
}

GaugeSeries gauge_compose(const GaugeSeries& outer, const GaugeSeries& inner) {
  if (outer.order != inner.order)
    throw InputError("gauge orders must match for composition");
  if (outer.terms.empty()) throw InputError("empty gauge series");
  int dim = outer.terms[0].rows();
  check_gauge_shape(outer, dim);
  check_gauge_shape(inner, dim);
  GaugeSeries out;
  out.order = outer.order;
  out.terms = series_mul(outer.terms, inner.terms);
  return out;
}

ObstructionResult obstruction(const TruncatedDeformation& d) {
  DeformationReport v = validate_deformation(d);
  if (!v.valid)
    throw MathError("deformation equations fail at order " +
                    std::to_string(v.first_failing_order));
  int dim = d.base.dim;
  CompatCochain ob = CompatCochain::zero(3, dim, dim);
  for (int i = 1; i <= d.order; ++i) {
    int j = d.order + 1 - i;
    if (j < 1 || j > d.order) continue;
    ob = ob + compat_bracket(d.theta(i), d.theta(j));
  }
  ob = ob.scaled(Q(-1, 2));
  CompatibleBimodule adj = adjoint_bimodule(d.base);
  ObstructionResult res;
  res.ob = ob;
  res.is_cocycle = delta_c_tuple(d.base, adj, ob).is_zero();
  return res;
}

ExtendResult extend(const TruncatedDeformation& d) {
  ObstructionResult obr = obstruction(d);
  int dim = d.base.dim;
  CompatibleBimodule adj = adjoint_bimodule(d.base);
  Matrix d2 = delta_c_matrix(d.base, adj, 2);

  ExtendResult res;
  res.ob = obr.ob;
  std::optional<Vec> x = solve(d2, vec_scale(Q(-1), obr.ob.coords()));
  if (x) {
    res.extended = true;
    CompatCochain next = CompatCochain::from_coords(2, dim, dim, *x);
    res.extension = d;
    res.extension.order = d.order + 1;
    res.extension.mu1_terms.push_back(next.comp(0));
    res.extension.mu2_terms.push_back(next.comp(1));
    return res;
  }

  // [Ob] != 0: express Ob over the H^3 representatives plus coboundaries
  // and return the representative coordinates.
  CochainComplexReport coh = cohomology(d.base, adj, 3);
  const std::vector<Vec>& reps = coh.degrees[3].representatives;
  std::vector<Vec> span = reps;
  for (Vec& b : image_basis(d2)) span.push_back(std::move(b));
  Vec target = obr.ob.coords();
  int ambient = static_cast<int>(target.size());
  Matrix m(ambient, static_cast<int>(span.size()));
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < ambient; ++r) m(r, c) = span[c][r];
  std::optional<Vec> z = solve(m, target);
  if (!z) throw MathError("obstruction cochain is not a 3-cocycle");
  res.obstruction_class.assign(z->begin(), z->begin() + reps.size());
  return res;
}

NormalizeResult normalize(const TruncatedDeformation& d) {
  DeformationReport v = validate_deformation(d);
  if (!v.valid)
    throw MathError("deformation equations fail at order " +
                    std::to_string(v.first_failing_order));
  int dim = d.base.dim;
  CompatibleBimodule adj = adjoint_bimodule(d.base);
  Matrix d1 = delta_c_matrix(d.base, adj, 1);

  NormalizeResult res;
  res.reduced = d;
  res.gauge = GaugeSeries::identity(dim, d.order);
  for (int p = 1; p <= d.order; ++p) {
    CompatCochain tp = res.reduced.theta(p);
    if (tp.is_zero()) continue;
    std::optional<Vec> x = solve(d1, vec_scale(Q(-1), tp.coords()));
    if (!x) break;  // leading pair is not a coboundary
    GaugeSeries g = GaugeSeries::identity(dim, d.order);
    g.terms[p] = operator_from_c1_coords(dim, *x);
    res.reduced = apply_gauge(res.reduced, g);
    res.gauge = gauge_compose(res.gauge, g);
    if (!res.reduced.theta(p).is_zero())
      throw MathError("gauge failed to cancel the order-" +
                      std::to_string(p) + " term");
  }
  res.trivialized = true;
  for (int p = 1; p <= d.order; ++p)
    if (!res.reduced.theta(p).is_zero()) {
      res.trivialized = false;
      res.leading_order = p;
      break;
    }
  return res;
}

RigidityReport rigidity_certificate(const CompatibleAlgebra& a) {
  CompatibleBimodule adj = adjoint_bimodule(a);
  CochainComplexReport coh = cohomology(a, adj, 2);
  RigidityReport rep;
  rep.h2 = coh.degrees[2];
  rep.rigid = rep.h2.dim == 0;
  return rep;
}

}  // namespace compalg
