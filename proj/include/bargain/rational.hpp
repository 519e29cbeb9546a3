#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bargain {

// Arbitrary-precision rational kept in canonical reduced form
// (positive denominator, gcd(|num|, den) == 1).  All arithmetic and
// comparisons are exact; doubles appear only at the output boundary.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  Rat(mpz_class n, mpz_class d);

  // Exact value of the binary expansion of x (finite values only).
  static Rat from_double(double x);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  // "n" when the denominator is 1, otherwise "n/d".
  std::string to_fraction() const { return q_.get_str(); }

  // Shortest decimal with at most `sig` significant digits, rounded
  // half-to-even.  Values needing more than 15 integer digits or with
  // magnitude below 1e-4 switch to exponent notation.
  std::string to_decimal(int sig = 6) const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return ::cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = ::cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

// Parses a nonnegative value literal: digits, digits.digits, or
// digits/digits with a denominator free of leading zeros.  Anything
// else (signs, whitespace, empty fields) throws std::invalid_argument.
Rat parse_value(std::string_view text);

// Nonnegative ratio num/den where den == 0 encodes +infinity (the
// greatest element) and num == 0 encodes zero.  num and den may not
// both be zero.  Ordering is by cross-multiplication, so equality is
// value equality, not representation equality.
class Ratio {
 public:
  Ratio(Rat num, Rat den);
  static Ratio infinity() { return Ratio(Rat(1), Rat(0)); }

  const Rat& num() const { return num_; }
  const Rat& den() const { return den_; }
  bool is_infinite() const { return den_.is_zero(); }
  bool is_zero() const { return num_.is_zero(); }

  // Finite value num/den; throws std::domain_error when infinite.
  Rat value() const;

  // "inf" when infinite, otherwise the value's rendering.
  std::string to_string(bool exact) const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  Rat num_, den_;
};

}  // namespace bargain
