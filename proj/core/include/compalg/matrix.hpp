#pragma once

#include <optional>
#include <vector>

#include "compalg/rational.hpp"

namespace compalg {

// Dense matrix over Rational, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  }

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return e_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return e_[idx(i, j)]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool is_zero() const;

  // Stacks rows of `o` below this matrix (column counts must agree).
  Matrix vstack(const Matrix& o) const;
  // Appends columns of `o` to the right (row counts must agree).
  Matrix hstack(const Matrix& o) const;

  std::vector<Vec> rows_as_vectors() const;
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * cols_ + j;
  }
  int rows_, cols_;
  std::vector<Rational> e_;
};

struct Rref {
  Matrix r;                     // reduced row echelon form
  std::vector<int> pivot_cols;  // pivot column of each nonzero row, ascending
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Gauss-Jordan elimination with deterministic pivoting: for each column,
// scanning left to right, the first row with a nonzero entry at or below
// the current row becomes the pivot row.
Rref rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of the null space {x : m x = 0}. One vector per free column, in
// increasing free-column order; the free coordinate is set to 1.
std::vector<Vec> kernel_basis(const Matrix& m);

// Independent spanning set of the column space: the original columns of m
// at the pivot positions of its RREF, in ascending column order.
std::vector<Vec> image_basis(const Matrix& m);

// Particular solution of m x = rhs with all free variables set to zero,
// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

// Presentation of span(numerator) / span(denominator) inside an ambient
// coordinate space. The denominator span must be contained in the
// numerator span.
struct SubquotientPresentation {
  int ambient_dim = 0;
  std::vector<Vec> numerator_span;
  std::vector<Vec> denominator_span;
};

struct Subquotient {
  int dim = 0;
  // Numerator vectors that extend a denominator-span basis to a basis of
  // the numerator span; their classes form a basis of the quotient.
  std::vector<Vec> representatives;
};

// Throws MathError when span(denominator) is not contained in
// span(numerator); this guards the delta^2 = 0 style invariants that make
// quotients well posed.
Subquotient subquotient(const SubquotientPresentation& p);

// --- small vector helpers shared across modules ---

Vec vec_zero(int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_concat(const std::vector<Vec>& parts);

}  // namespace compalg
