#ifndef BOIJ_RATIONAL_HPP
#define BOIJ_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace boij {

using BigInt = mpz_class;

/// Exact arbitrary-precision fraction, always stored reduced with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: integers convert implicitly
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(const BigInt& v) : v_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts `num` or `num/den` with optional leading sign. Throws
  /// InvalidArgument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational inverse() const;
  /// Largest integer <= this.
  BigInt floor() const;

  /// `num/den`, denominator omitted when 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace boij

#endif  // BOIJ_RATIONAL_HPP
