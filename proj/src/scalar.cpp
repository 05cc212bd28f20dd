#include "arbor/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace arbor {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 x) {
  return x >= std::numeric_limits<int64_t>::min() + 1 && x <= std::numeric_limits<int64_t>::max();
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) { *this = from_wide(n, d); }

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<int64_t>(n);
  r.den_ = static_cast<int64_t>(d);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(__int128(a.num_) + b.num_, 1);
  return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(__int128(a.num_) * b.num_, 1);
  return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return Rational::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Rational n2 = b.re_ * b.re_ + b.im_ * b.im_;
  if (n2.is_zero()) throw std::domain_error("division by zero scalar");
  Scalar num = a * b.conj();
  return {num.re_ / n2, num.im_ / n2};
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.re_ <=> b.re_; c != 0) return c;
  return a.im_ <=> b.im_;
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "i";
  }
  if (re_.is_zero()) return imag;
  std::string sep = imag[0] == '-' ? "" : "+";
  return "(" + re_.str() + sep + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace arbor
