#include "flatspec/numeric.hpp"

#include <charconv>
#include <numeric>

#include "flatspec/error.hpp"

namespace flatspec {

std::string to_string(const Integer& x) { return x.str(); }

Integer binomial(long n, long k) {
  if (n < 0)
    fail_range("binomial: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Integer r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

Rational4 Rational4::from_fraction(long long p, long long q) {
  if (q == 0)
    fail_validation("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (4 % q != 0)
    fail_validation("translation denominator " + std::to_string(q) +
                    " not supported (must divide 4)");
  return from_quarters(p * (4 / q));
}

namespace {

long long parse_ll(std::string_view s, std::string_view whole) {
  long long v = 0;
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail_validation("cannot parse rational '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational4 Rational4::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational4(parse_ll(s, text));
  return from_fraction(parse_ll(trim(s.substr(0, slash)), text),
                       parse_ll(trim(s.substr(slash + 1)), text));
}

long long Rational4::numerator() const {
  long long g = std::gcd(quarters_ < 0 ? -quarters_ : quarters_, 4LL);
  return g == 0 ? 0 : quarters_ / g;
}

long long Rational4::denominator() const {
  if (quarters_ == 0)
    return 1;
  return 4 / std::gcd(quarters_ < 0 ? -quarters_ : quarters_, 4LL);
}

std::string Rational4::str() const {
  long long d = denominator();
  if (d == 1)
    return std::to_string(numerator());
  return std::to_string(numerator()) + "/" + std::to_string(d);
}

std::ostream& operator<<(std::ostream& os, Rational4 r) { return os << r.str(); }

std::string GaussianInt::str() const {
  if (im == 0)
    return re.str();
  std::string s = re.str();
  s += im < 0 ? "-" : "+";
  Integer a = im < 0 ? Integer(-im) : im;
  if (a != 1)
    s += a.str();
  return s + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.str(); }

GaussianInt quarter_root_power(long long q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

}  // namespace flatspec
