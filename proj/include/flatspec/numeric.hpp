#ifndef FLATSPEC_NUMERIC_HPP_
#define FLATSPEC_NUMERIC_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace flatspec {

using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& x);

/// Exact C(n, k); zero when k < 0 or k > n. Throws RangeError for n < 0.
Integer binomial(long n, long k);

/// A rational number whose reduced denominator divides 4.
///
/// Stored as a count of quarters, so every value is automatically in lowest
/// terms when read back through numerator()/denominator().
class Rational4 {
 public:
  constexpr Rational4() = default;
  constexpr Rational4(long long integer) : quarters_(4 * integer) {}  // NOLINT

  static constexpr Rational4 from_quarters(long long q) {
    Rational4 r;
    r.quarters_ = q;
    return r;
  }
  /// Throws ValidationError unless q is 1, 2 or 4 after reduction.
  static Rational4 from_fraction(long long p, long long q);
  /// Accepts "p/q" or a bare integer, with optional sign.
  static Rational4 parse(std::string_view text);

  constexpr long long quarters() const { return quarters_; }
  long long numerator() const;
  long long denominator() const;
  bool is_integer() const { return quarters_ % 4 == 0; }

  /// Representative in [0, 1).
  Rational4 frac() const {
    long long q = quarters_ % 4;
    return from_quarters(q < 0 ? q + 4 : q);
  }

  std::string str() const;

  friend constexpr Rational4 operator+(Rational4 a, Rational4 b) {
    return from_quarters(a.quarters_ + b.quarters_);
  }
  friend constexpr Rational4 operator-(Rational4 a, Rational4 b) {
    return from_quarters(a.quarters_ - b.quarters_);
  }
  friend constexpr Rational4 operator-(Rational4 a) { return from_quarters(-a.quarters_); }
  friend constexpr Rational4 operator*(long long k, Rational4 a) {
    return from_quarters(k * a.quarters_);
  }
  Rational4& operator+=(Rational4 b) {
    quarters_ += b.quarters_;
    return *this;
  }
  friend constexpr auto operator<=>(Rational4, Rational4) = default;

 private:
  long long quarters_ = 0;
};

std::ostream& operator<<(std::ostream& os, Rational4 r);

/// Exact element a + bi of Z[i].
struct GaussianInt {
  Integer re = 0;
  Integer im = 0;

  GaussianInt() = default;
  GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator*(const Integer& k, const GaussianInt& a) {
    return {k * a.re, k * a.im};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  bool is_real() const { return im == 0; }
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

/// e^{-2 pi i q / 4}: 1, -i, -1, i for q = 0, 1, 2, 3 (mod 4).
GaussianInt quarter_root_power(long long q);

}  // namespace flatspec

#endif  // FLATSPEC_NUMERIC_HPP_
