#include "compalg/matrix.hpp"

#include <algorithm>

namespace compalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        p(i, j) += a * o(k, j);
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix sum shape mismatch");
  Matrix s(rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) s.e_[t] = e_[t] + o.e_[t];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix difference shape mismatch");
  Matrix s(rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) s.e_[t] = e_[t] - o.e_[t];
  return s;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw InputError("matrix apply shape mismatch");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc;
    for (int j = 0; j < cols_; ++j) {
      if ((*this)(i, j).is_zero() || x[j].is_zero()) continue;
      acc += (*this)(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw InputError("vstack column mismatch");
  Matrix s(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) s(rows_ + i, j) = o(i, j);
  return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw InputError("hstack row mismatch");
  Matrix s(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) s(i, cols_ + j) = o(i, j);
  }
  return s;
}

std::vector<Vec> Matrix::rows_as_vectors() const {
  std::vector<Vec> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    out[i].resize(cols_);
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw InputError("row length mismatch in from_rows");
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& r = out.r;
  int pivot_row = 0;
  for (int col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    int sel = -1;
    for (int i = pivot_row; i < r.rows(); ++i) {
      if (!r(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pivot_row, j));
    Rational inv = Rational(1) / r(pivot_row, col);
    for (int j = col; j < r.cols(); ++j) r(pivot_row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r(i, col).is_zero()) continue;
      Rational f = r(i, col);
      for (int j = col; j < r.cols(); ++j)
        r(i, j) -= f * r(pivot_row, j);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return out;
}

int rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rational(1);
    for (size_t row = 0; row < rr.pivot_cols.size(); ++row)
      v[rr.pivot_cols[row]] = -rr.r(static_cast<int>(row), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<Vec> basis;
  for (int c : rr.pivot_cols) {
    Vec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw InputError("solve rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Rref rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t row = 0; row < rr.pivot_cols.size(); ++row)
    x[rr.pivot_cols[row]] = rr.r(static_cast<int>(row), m.cols());
  return x;
}

Subquotient subquotient(const SubquotientPresentation& p) {
  for (const Vec& v : p.numerator_span)
    if (static_cast<int>(v.size()) != p.ambient_dim)
      throw InputError("numerator vector length mismatch");
  for (const Vec& v : p.denominator_span)
    if (static_cast<int>(v.size()) != p.ambient_dim)
      throw InputError("denominator vector length mismatch");

  Matrix num = Matrix::from_rows(p.numerator_span, p.ambient_dim);
  Matrix den = Matrix::from_rows(p.denominator_span, p.ambient_dim);
  int r_num = rank(num);
  int r_den = rank(den);
  if (rank(num.vstack(den)) != r_num)
    throw MathError("subquotient denominator span not contained in numerator span");

  Subquotient out;
  out.dim = r_num - r_den;
  std::vector<Vec> kept = p.denominator_span;
  int r_cur = r_den;
  for (const Vec& v : p.numerator_span) {
    if (r_cur == r_num) break;
    kept.push_back(v);
    int r_new = rank(Matrix::from_rows(kept, p.ambient_dim));
    if (r_new > r_cur) {
      out.representatives.push_back(v);
      r_cur = r_new;
    } else {
      kept.pop_back();
    }
  }
  return out;
}

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector sum length mismatch");
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector difference length mismatch");
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

Vec vec_concat(const std::vector<Vec>& parts) {
  Vec out;
  for (const Vec& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace compalg
