#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compalg {

// Raised when a document or argument is malformed (bad shapes, unparsable
// scalars, out-of-range indices). Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a mathematical precondition fails (non-cocycle twist, spans
// not nested in a subquotient, non-commutative Kahler input). Maps to exit
// code 1 in the CLI.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational scalar. Always held in canonical reduced
// form (gcd(num, den) = 1, den > 0), so operator== is structural equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(static_cast<long int>(n)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with optional sign, base 10.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, else "p/q"; q always positive.
  std::string str() const { return v_.get_str(); }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

using Vec = std::vector<Rational>;

inline Rational Q(long num, long den = 1) { return Rational(num, den); }

inline Rational Rational::from_string(std::string_view s) {
  size_t begin = s.find_first_not_of(" \t");
  size_t end = s.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw InputError("empty rational literal");
  std::string trimmed(s.substr(begin, end - begin + 1));
  mpq_class q;
  if (q.set_str(trimmed, 10) != 0)
    throw InputError("bad rational literal '" + trimmed + "'");
  if (q.get_den() == 0)
    throw InputError("rational with zero denominator '" + trimmed + "'");
  q.canonicalize();
  return Rational(q);
}

}  // namespace compalg
