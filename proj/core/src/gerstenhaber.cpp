#include "compalg/gerstenhaber.hpp"

namespace compalg {

CompatCochain::CompatCochain(std::vector<Cochain> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw InputError("empty tuple cochain");
  int n = static_cast<int>(comps_.size());
  for (const Cochain& c : comps_) {
    if (c.arity() != n || c.dim_in() != comps_[0].dim_in() ||
        c.dim_out() != comps_[0].dim_out())
      throw InputError("tuple cochain component shape mismatch");
  }
}

CompatCochain CompatCochain::zero(int degree, int dim_in, int dim_out) {
  if (degree < 1) throw InputError("tuple cochain degree must be >= 1");
  return CompatCochain(
      std::vector<Cochain>(degree, Cochain(degree, dim_in, dim_out)));
}

Vec CompatCochain::coords() const {
  std::vector<Vec> parts;
  parts.reserve(comps_.size());
  for (const Cochain& c : comps_) parts.push_back(c.coords());
  return vec_concat(parts);
}

CompatCochain CompatCochain::from_coords(int degree, int dim_in, int dim_out,
                                         const Vec& coords) {
  CompatCochain f = zero(degree, dim_in, dim_out);
  size_t block = f.comps_[0].coords().size();
  if (coords.size() != block * degree)
    throw InputError("tuple cochain coordinate length mismatch");
  for (int i = 0; i < degree; ++i) {
    Vec part(coords.begin() + i * block, coords.begin() + (i + 1) * block);
    f.comps_[i] = Cochain::from_coords(degree, dim_in, dim_out,
                                       std::move(part));
  }
  return f;
}

CompatCochain CompatCochain::operator+(const CompatCochain& o) const {
  if (degree() != o.degree()) throw InputError("tuple degree mismatch");
  std::vector<Cochain> out;
  out.reserve(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i)
    out.push_back(comps_[i] + o.comps_[i]);
  return CompatCochain(std::move(out));
}

CompatCochain CompatCochain::operator-(const CompatCochain& o) const {
  if (degree() != o.degree()) throw InputError("tuple degree mismatch");
  std::vector<Cochain> out;
  out.reserve(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i)
    out.push_back(comps_[i] - o.comps_[i]);
  return CompatCochain(std::move(out));
}

CompatCochain CompatCochain::scaled(const Rational& k) const {
  std::vector<Cochain> out;
  out.reserve(comps_.size());
  for (const Cochain& c : comps_) out.push_back(c.scaled(k));
  return CompatCochain(std::move(out));
}

bool CompatCochain::operator==(const CompatCochain& o) const {
  return comps_ == o.comps_;
}

bool CompatCochain::is_zero() const {
  for (const Cochain& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Cochain circle(const Cochain& f, const Cochain& g) {
  if (f.arity() < 1 || g.arity() < 1)
    throw InputError("circle product needs arity >= 1 operands");
  if (f.dim_in() != g.dim_in() || f.dim_in() != f.dim_out() ||
      g.dim_in() != g.dim_out())
    throw InputError("circle product needs endotype cochains on one space");
  int dim = f.dim_in();
  int m = f.arity() - 1;  // graded degrees
  int n = g.arity() - 1;
  int arity = m + n + 1;
  Cochain out(arity, dim, dim);
  std::vector<int> t(arity, 0);
  std::vector<int> fargs(f.arity());
  std::vector<int> gargs(g.arity());
  if (dim == 0) return out;
  do {
    for (int i = 1; i <= m + 1; ++i) {
      // sign (-1)^{(i-1) n}
      bool neg = ((i - 1) * n) % 2 != 0;
      for (int p = 0; p < n + 1; ++p) gargs[p] = t[i - 1 + p];
      Vec gv = g.value_on_basis(gargs);
      for (int k = 0; k < dim; ++k) {
        if (gv[k].is_zero()) continue;
        for (int p = 0; p < i - 1; ++p) fargs[p] = t[p];
        fargs[i - 1] = k;
        for (int p = i; p < f.arity(); ++p) fargs[p] = t[p + n];
        Vec fv = f.value_on_basis(fargs);
        for (int out_k = 0; out_k < dim; ++out_k) {
          if (fv[out_k].is_zero()) continue;
          Rational term = gv[k] * fv[out_k];
          if (neg) term = -term;
          out.at(out_k, t) += term;
        }
      }
    }
  } while (next_multi(t, dim));
  return out;
}

Cochain bracket_g(const Cochain& f, const Cochain& g) {
  int m = f.arity() - 1;
  int n = g.arity() - 1;
  Cochain fg = circle(f, g);
  Cochain gf = circle(g, f);
  if ((m * n) % 2 == 0) return fg - gf;
  return fg + gf;
}

Cochain cup(const CompatibleAlgebra& a, const Cochain& f, const Cochain& g,
            ProductSelector which) {
  if (f.dim_in() != a.dim || g.dim_in() != a.dim || f.dim_out() != a.dim ||
      g.dim_out() != a.dim)
    throw InputError("cup product needs endotype cochains over the algebra");
  const BilinearMap& mu = which == ProductSelector::mu1 ? a.mu1 : a.mu2;
  int m = f.arity(), n = g.arity();
  Cochain out(m + n, a.dim, a.dim);
  if (a.dim == 0) return out;
  std::vector<int> t(m + n, 0);
  std::vector<int> left(m), right(n);
  do {
    for (int p = 0; p < m; ++p) left[p] = t[p];
    for (int p = 0; p < n; ++p) right[p] = t[m + p];
    Vec v = mul(mu, f.value_on_basis(left), g.value_on_basis(right));
    for (int k = 0; k < a.dim; ++k)
      if (!v[k].is_zero()) out.at(k, t) = v[k];
  } while (next_multi(t, a.dim));
  return out;
}

CompatCochain compat_bracket(const CompatCochain& f, const CompatCochain& g) {
  if (f.dim_in() != g.dim_in() || f.dim_out() != g.dim_out())
    throw InputError("tuple bracket shape mismatch");
  if (f.dim_in() != f.dim_out())
    throw InputError("tuple bracket needs endotype components");
  int mc = f.degree();  // tuple lengths; graded degrees are mc-1, nc-1
  int nc = g.degree();
  int out_deg = mc + nc - 1;
  CompatCochain out = CompatCochain::zero(out_deg, f.dim_in(), f.dim_out());
  // component i (1-based) collects [f_q, g_r] with q + r = i + 1
  for (int i = 1; i <= out_deg; ++i) {
    Cochain acc(out_deg, f.dim_in(), f.dim_out());
    for (int q = 1; q <= mc; ++q) {
      int r = i + 1 - q;
      if (r < 1 || r > nc) continue;
      acc = acc + bracket_g(f.comp(q - 1), g.comp(r - 1));
    }
    out.comp(i - 1) = acc;
  }
  return out;
}

Cochain phi(const CompatCochain& f) {
  Cochain s = f.comp(0);
  for (int i = 1; i < f.degree(); ++i) s = s + f.comp(i);
  return s;
}

MaurerCartanResult is_maurer_cartan(const BilinearMap& mu1,
                                    const BilinearMap& mu2) {
  if (mu1.arity() != 2 || mu2.arity() != 2 ||
      mu1.dim_in() != mu2.dim_in() || mu1.dim_in() != mu1.dim_out() ||
      mu2.dim_in() != mu2.dim_out())
    throw InputError("Maurer-Cartan test needs two products on one space");
  CompatCochain pair({mu1, mu2});
  CompatCochain sq = compat_bracket(pair, pair);
  MaurerCartanResult res;
  res.holds = true;
  for (int i = 0; i < sq.degree(); ++i) {
    if (!sq.comp(i).is_zero()) {
      res.holds = false;
      res.witness_component = i;
      res.witness = sq.comp(i);
      return res;
    }
  }
  return res;
}

CompatCochain pair_cochain(const CompatibleAlgebra& a) {
  return CompatCochain({a.mu1, a.mu2});
}

CompatCochain d_mu(const CompatibleAlgebra& a, const CompatCochain& f) {
  if (f.dim_in() != a.dim || f.dim_out() != a.dim)
    throw InputError("differential argument shape mismatch");
  return compat_bracket(pair_cochain(a), f);
}

}  // namespace compalg
