#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace arbor {

using cplx = std::complex<double>;

// Fourier coefficients v_k, |k| <= K, of the twisted variable at time t.
struct NLSState {
  int K = 0;
  double t = 0.0;
  std::vector<cplx> v;  // index k + K

  NLSState() = default;
  NLSState(int K_, double t_, std::vector<cplx> v_);
  static NLSState zero(int K, double t = 0.0);

  bool in_range(int64_t k) const { return k >= -K && k <= K; }
  cplx at(int64_t k) const { return in_range(k) ? v[static_cast<size_t>(k + K)] : cplx(0.0); }
  // parity 1 selects the conjugate coefficient.
  cplx at(int64_t k, int parity) const { return parity == 1 ? std::conj(at(k)) : at(k); }
  double mass() const;
};

// Phase k^2 + k1^2 - k2^2 - k3^2 with k = -k1 + k2 + k3.
int64_t nls_phase(int64_t k1, int64_t k2, int64_t k3);

// Right-hand side split into the sum over k1 not in {k2, k3} and the sum
// over the complementary index set, which is resonant.
struct NLSSplit {
  std::vector<cplx> nonresonant;
  std::vector<cplx> resonant;
};

std::vector<cplx> nls_rhs(const NLSState& s, NLSSplit* split = nullptr);
// Unsplit truncated cubic convolution, used to check the split.
std::vector<cplx> nls_full_convolution(const NLSState& s);

// Classical fourth-order Runge-Kutta with a fixed step. Throws on non-finite
// values.
NLSState integrate(const NLSState& s0, double t_end, int steps);

}  // namespace arbor
