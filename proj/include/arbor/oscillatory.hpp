#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arbor/poly.hpp"
#include "arbor/tree.hpp"

namespace arbor {

// Polynomial in t with rational-function coefficients, index = power of t.
using TimePoly = std::vector<RationalFunction>;

// Finite sum of Q_j(t) exp(i P_j t) with pairwise distinct phases P_j.
class OscillatorySum {
 public:
  using Terms = std::map<FreqPolynomial, TimePoly, PolyLess>;

  OscillatorySum() = default;
  OscillatorySum(const RationalFunction& c);  // NOLINT(google-explicit-constructor)
  static OscillatorySum exp_phase(const FreqPolynomial& phase, const RationalFunction& c = RationalFunction(1));
  static OscillatorySum time(const RationalFunction& c = RationalFunction(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend OscillatorySum operator+(const OscillatorySum& a, const OscillatorySum& b);
  friend OscillatorySum operator-(const OscillatorySum& a, const OscillatorySum& b) { return a + b.scaled(Scalar(-1)); }
  friend OscillatorySum operator*(const OscillatorySum& a, const OscillatorySum& b);
  OscillatorySum& operator+=(const OscillatorySum& o) { return *this = *this + o; }
  OscillatorySum scaled(const RationalFunction& c) const;

  OscillatorySum ddt() const;
  // Exact integral from 0 to t; terms with a nonzero phase are integrated by
  // parts, so the phase enters coefficients through its reciprocal.
  OscillatorySum integrate_0_to_t() const;

  // Throws std::domain_error when a coefficient denominator vanishes.
  std::complex<double> eval(const FreqAssignment& a, double t) const;

  friend bool operator==(const OscillatorySum& a, const OscillatorySum& b);

  std::string str() const;
  std::string latex() const;

 private:
  void add_term(const FreqPolynomial& phase, const TimePoly& q);
  Terms terms_;
};

struct PiOptions {
  Dispersion dispersion;
  // When set, node frequencies are evaluated first and every phase becomes
  // an integer constant, so vanishing phases integrate as polynomials.
  const FreqAssignment* at = nullptr;
  // Fourier multiplier of the T2 integral; unset means the constant 1.
  std::function<FreqPolynomial(const FreqVector&)> multiplier;
};

// Iterated oscillatory integral of a forest. The integral attached to a T2
// edge of parity p carries the factor -i(-1)^p, which is the conjugate
// Duhamel term for p = 1.
OscillatorySum pi_map(const Forest& f, const PiOptions& opt = {});
OscillatorySum pi_map(const DecoratedTree& t, const PiOptions& opt = {});

inline OscillatorySum integrate_0_to_t(const OscillatorySum& s) { return s.integrate_0_to_t(); }
inline OscillatorySum ddt(const OscillatorySum& s) { return s.ddt(); }

}  // namespace arbor
