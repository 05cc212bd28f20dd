#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbor/scalar.hpp"

namespace arbor {

using Symbol = uint32_t;

// Symbol naming: 0 is "k", 1..999 are "k1".."k999", 1000+j is "l<j>"
// (letter templates), 2000+j is "p<j>" (opaque phase atoms).
inline constexpr Symbol kEllBase = 1000;
inline constexpr Symbol kAtomBase = 2000;

std::string symbol_name(Symbol s);
std::string symbol_latex(Symbol s);
std::optional<Symbol> parse_symbol(const std::string& name);

// Integer assignment of frequency symbols.
class FreqAssignment {
 public:
  FreqAssignment() = default;
  FreqAssignment(std::initializer_list<std::pair<const Symbol, int64_t>> init) : values_(init) {}

  void set(Symbol s, int64_t v) { values_[s] = v; }
  bool has(Symbol s) const { return values_.count(s) != 0; }
  int64_t at(Symbol s) const;  // throws naming the symbol when unassigned
  const std::map<Symbol, int64_t>& values() const { return values_; }

 private:
  std::map<Symbol, int64_t> values_;
};

class FreqPolynomial;

// Integer linear form in the symbols (a node frequency for d = 1).
class FreqVector {
 public:
  FreqVector() = default;
  static FreqVector symbol(Symbol s, int64_t c = 1);

  const std::map<Symbol, int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int64_t coeff(Symbol s) const;

  FreqVector operator-() const;
  friend FreqVector operator+(const FreqVector& a, const FreqVector& b);
  friend FreqVector operator-(const FreqVector& a, const FreqVector& b) { return a + (-b); }
  FreqVector scaled(int64_t c) const;
  FreqVector& operator+=(const FreqVector& o) { return *this = *this + o; }

  // Replace symbol s by the linear form f.
  FreqVector substitute(Symbol s, const FreqVector& f) const;
  int64_t eval(const FreqAssignment& a) const;

  FreqPolynomial to_poly() const;
  FreqPolynomial square() const;

  std::string str() const;
  std::string latex() const;
  static FreqVector parse(const std::string& text);

  friend bool operator==(const FreqVector& a, const FreqVector& b) = default;
  friend bool operator<(const FreqVector& a, const FreqVector& b) { return a.coeffs_ < b.coeffs_; }

 private:
  void add_term(Symbol s, int64_t c);
  std::map<Symbol, int64_t> coeffs_;
};

// Monomial as sorted (symbol, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<Symbol, uint32_t>>;

uint32_t monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
// Graded lexicographic comparison: negative, zero or positive.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

class FreqPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  FreqPolynomial() = default;
  FreqPolynomial(const Scalar& c);  // NOLINT(google-explicit-constructor)
  FreqPolynomial(int64_t c) : FreqPolynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static FreqPolynomial symbol(Symbol s);
  static FreqPolynomial monomial(const Monomial& m, const Scalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  uint32_t degree() const;
  // Leading term in grlex order (the largest monomial); requires nonzero.
  const std::pair<const Monomial, Scalar>& leading() const { return *terms_.rbegin(); }

  FreqPolynomial operator-() const;
  friend FreqPolynomial operator+(const FreqPolynomial& a, const FreqPolynomial& b);
  friend FreqPolynomial operator-(const FreqPolynomial& a, const FreqPolynomial& b);
  friend FreqPolynomial operator*(const FreqPolynomial& a, const FreqPolynomial& b);
  FreqPolynomial scaled(const Scalar& c) const;
  FreqPolynomial& operator+=(const FreqPolynomial& o);
  FreqPolynomial& operator-=(const FreqPolynomial& o) { return *this += -o; }

  Scalar eval(const FreqAssignment& a) const;
  std::vector<Symbol> symbols() const;

  // Text form "c·k1^a·k2^b + …", monomials by decreasing grlex order.
  std::string str() const;
  std::string latex() const;

  friend bool operator==(const FreqPolynomial& a, const FreqPolynomial& b) = default;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

// Total order on polynomials, used for canonical containers.
int poly_cmp(const FreqPolynomial& a, const FreqPolynomial& b);
struct PolyLess {
  bool operator()(const FreqPolynomial& a, const FreqPolynomial& b) const { return poly_cmp(a, b) < 0; }
};

FreqPolynomial poly_square_of_linear(const FreqVector& f, const Scalar& sign = Scalar(1));
Scalar poly_eval(const FreqPolynomial& p, const FreqAssignment& a);

// num / prod(factors). Factors are nonconstant polynomials with
// leading coefficient 1, kept as a sorted multiset and never expanded, so sums
// of many reciprocals share factors. No GCD computation is performed.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const FreqPolynomial& num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Scalar& c) : RationalFunction(FreqPolynomial(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int64_t c) : RationalFunction(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const FreqPolynomial& num, const FreqPolynomial& den);

  static RationalFunction reciprocal(const FreqPolynomial& den) { return {FreqPolynomial(1), den}; }

  const FreqPolynomial& num() const { return num_; }
  const std::vector<FreqPolynomial>& den_factors() const { return factors_; }
  FreqPolynomial den() const;  // expanded denominator

  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction scaled(const Scalar& c) const;
  RationalFunction divided_by(const FreqPolynomial& p) const;

  // Exact cross-multiplication equality over the lcm of the factor multisets.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  // Throws std::domain_error naming the vanishing factor.
  Scalar eval(const FreqAssignment& a) const;

  std::string str() const;
  std::string latex() const;

 private:
  FreqPolynomial num_;
  std::vector<FreqPolynomial> factors_;
};

bool ratfun_is_zero(const RationalFunction& r);

}  // namespace arbor
