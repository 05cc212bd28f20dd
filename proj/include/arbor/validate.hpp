#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arbor/nls.hpp"
#include "arbor/normalform.hpp"

namespace arbor {

// Gaussian coefficients normalised to unit mass.
NLSState random_state(int K, uint64_t seed, double t = 0.0);

double split_recombination_error(const NLSState& s);

struct OrderSample {
  double t = 0.0;
  double error = 0.0;
  double ratio = 0.0;  // error at the previous (larger) time over this one; 0 for the first
};

// Series of order r against the integrated solution, max over |k| <= K of
// |exp(-itk^2) v_k(t) - U_k^r(t)|.
std::vector<OrderSample> order_condition_test(int r, const NLSState& v0, const std::vector<double>& ts, int steps = 64);

// |(Y(v(t0+h)) - Y(v(t0-h)))/2h - expansion at v(t0)| for the monomial of t
// at the assignment a.
double dt_upsilon_fd_residual(const DecoratedTree& t, const FreqAssignment& a, const NLSState& at_t0, double h);

struct PowerFit {
  std::vector<double> residuals;
  double exponent = 0.0;
};
PowerFit fit_power(const std::vector<double>& hs, const std::vector<double>& residuals);

struct DecompositionTerms {
  cplx n2;      // boundary-free term i exp(i phase t) vbar v v
  cplx dn0;     // time derivative of the integrated-by-parts term
  cplx ntilde;  // remainder with the time derivative of the coefficients
};

// Direct sums over k1 not in {k2, k3} with |phase| > N.
DecompositionTerms bruteforce_decomposition(int64_t k, const NLSState& v, int64_t N);

// Nested adaptive quadrature of the iterated integrals of t at a.
cplx pi_quadrature(const DecoratedTree& t, const FreqAssignment& a, double time);

// Values in [-range, range] for the symbols of t with every T2 node
// non-resonant; nullopt after max_tries failures.
std::optional<FreqAssignment> random_nonresonant_assignment(const DecoratedTree& t, std::mt19937_64& rng, int64_t range,
                                                            int max_tries = 1000);

}  // namespace arbor
