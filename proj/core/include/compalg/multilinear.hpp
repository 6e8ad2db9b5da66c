#pragma once

#include <cstdint>
#include <vector>

#include "compalg/matrix.hpp"
#include "compalg/rational.hpp"

namespace compalg {

// Number of basis tuples (dim^arity). Desk scale keeps this small; overflow
// is still checked because arity grows during bracket computations.
int64_t pow_dim(int dim, int arity);

// Multilinear map A^{tensor n} -> M given by coefficients on basis tuples:
// f(e_{i_1},...,e_{i_n}) = sum_k c[k][i_1...i_n] e_k. Stored flat with the
// output index major and the input multi-index in lexicographic order, so
// the coefficient vector doubles as the coordinate vector of f in the
// canonical cochain basis. Arity 0 is a plain vector in M.
class Cochain {
 public:
  Cochain() : arity_(0), dim_in_(0), dim_out_(0) {}
  Cochain(int arity, int dim_in, int dim_out);

  int arity() const { return arity_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int64_t tuple_count() const { return tuples_; }

  Rational& at(int out, const std::vector<int>& multi) {
    return c_[flat(out, multi)];
  }
  const Rational& at(int out, const std::vector<int>& multi) const {
    return c_[flat(out, multi)];
  }

  // Value on a basis tuple, as a vector in M.
  Vec value_on_basis(const std::vector<int>& multi) const;

  // Full multilinear evaluation on arbitrary vectors (args.size() == arity).
  Vec value(const std::vector<Vec>& args) const;

  const Vec& coords() const { return c_; }
  Vec& coords() { return c_; }
  static Cochain from_coords(int arity, int dim_in, int dim_out, Vec coords);

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(const Rational& k) const;
  bool operator==(const Cochain& o) const;
  bool is_zero() const { return vec_is_zero(c_); }

  int64_t flat_multi(const std::vector<int>& multi) const;
  size_t flat(int out, const std::vector<int>& multi) const {
    return static_cast<size_t>(out) * tuples_ + flat_multi(multi);
  }

 private:
  void check_same_shape(const Cochain& o) const;
  int arity_, dim_in_, dim_out_;
  int64_t tuples_ = 1;
  Vec c_;
};

// A bilinear product or 2-cochain is an arity-2 multilinear map.
using BilinearMap = Cochain;

BilinearMap make_bilinear(int dim_in, int dim_out);

// Identity map of A as an arity-1 cochain.
Cochain identity_cochain(int dim);

// Walks all multi-indices of the given arity over {0..dim-1} in
// lexicographic order. Returns false once exhausted.
bool next_multi(std::vector<int>& multi, int dim);

}  // namespace compalg
