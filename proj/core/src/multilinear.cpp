#include "compalg/multilinear.hpp"

namespace compalg {

int64_t pow_dim(int dim, int arity) {
  int64_t p = 1;
  for (int i = 0; i < arity; ++i) {
    p *= dim;
    if (p > (int64_t(1) << 40))
      throw InputError("cochain coefficient table too large");
  }
  return p;
}

Cochain::Cochain(int arity, int dim_in, int dim_out)
    : arity_(arity), dim_in_(dim_in), dim_out_(dim_out) {
  if (arity < 0 || dim_in < 0 || dim_out < 0)
    throw InputError("negative cochain shape");
  tuples_ = pow_dim(dim_in, arity);
  c_.assign(static_cast<size_t>(dim_out) * tuples_, Rational());
}

int64_t Cochain::flat_multi(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != arity_)
    throw InputError("cochain multi-index arity mismatch");
  int64_t f = 0;
  for (int i : multi) {
    if (i < 0 || i >= dim_in_) throw InputError("cochain index out of range");
    f = f * dim_in_ + i;
  }
  return f;
}

Vec Cochain::value_on_basis(const std::vector<int>& multi) const {
  Vec v(dim_out_);
  int64_t base = flat_multi(multi);
  for (int k = 0; k < dim_out_; ++k)
    v[k] = c_[static_cast<size_t>(k) * tuples_ + base];
  return v;
}

Vec Cochain::value(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw InputError("cochain evaluation arity mismatch");
  for (const Vec& a : args)
    if (static_cast<int>(a.size()) != dim_in_)
      throw InputError("cochain argument dimension mismatch");
  Vec out(dim_out_);
  std::vector<int> multi(arity_, 0);
  if (arity_ == 0) return value_on_basis(multi);
  do {
    Rational weight(1);
    for (int p = 0; p < arity_ && !weight.is_zero(); ++p)
      weight *= args[p][multi[p]];
    if (weight.is_zero()) continue;
    int64_t base = flat_multi(multi);
    for (int k = 0; k < dim_out_; ++k) {
      const Rational& c = c_[static_cast<size_t>(k) * tuples_ + base];
      if (!c.is_zero()) out[k] += weight * c;
    }
  } while (next_multi(multi, dim_in_));
  return out;
}

Cochain Cochain::from_coords(int arity, int dim_in, int dim_out, Vec coords) {
  Cochain f(arity, dim_in, dim_out);
  if (coords.size() != f.c_.size())
    throw InputError("cochain coordinate length mismatch");
  f.c_ = std::move(coords);
  return f;
}

void Cochain::check_same_shape(const Cochain& o) const {
  if (arity_ != o.arity_ || dim_in_ != o.dim_in_ || dim_out_ != o.dim_out_)
    throw InputError("cochain shape mismatch");
}

Cochain Cochain::operator+(const Cochain& o) const {
  check_same_shape(o);
  Cochain s = *this;
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
  return s;
}

Cochain Cochain::operator-(const Cochain& o) const {
  check_same_shape(o);
  Cochain s = *this;
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] -= o.c_[i];
  return s;
}

Cochain Cochain::scaled(const Rational& k) const {
  Cochain s = *this;
  for (Rational& x : s.c_) x *= k;
  return s;
}

bool Cochain::operator==(const Cochain& o) const {
  return arity_ == o.arity_ && dim_in_ == o.dim_in_ &&
         dim_out_ == o.dim_out_ && c_ == o.c_;
}

BilinearMap make_bilinear(int dim_in, int dim_out) {
  return Cochain(2, dim_in, dim_out);
}

Cochain identity_cochain(int dim) {
  Cochain f(1, dim, dim);
  for (int i = 0; i < dim; ++i) f.at(i, {i}) = Rational(1);
  return f;
}

bool next_multi(std::vector<int>& multi, int dim) {
  for (int p = static_cast<int>(multi.size()) - 1; p >= 0; --p) {
    if (++multi[p] < dim) return true;
    multi[p] = 0;
  }
  return false;
}

}  // namespace compalg
