#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace arbor {

// Exact rational over int64 with overflow detection. Arithmetic that would
// leave the int64 range throws std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  static Rational from_wide(__int128 n, __int128 d);
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Scalar conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  Scalar operator-() const { return {-re_, -im_}; }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;
  // Lexicographic on (re, im); only used to order containers.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace arbor
