#include "arbor/nls.hpp"

#include <cmath>
#include <stdexcept>

namespace arbor {

NLSState::NLSState(int K_, double t_, std::vector<cplx> v_) : K(K_), t(t_), v(std::move(v_)) {
  if (K < 0) throw std::invalid_argument("truncation K must be nonnegative");
  if (v.size() != static_cast<size_t>(2 * K + 1)) throw std::invalid_argument("state needs 2K+1 coefficients");
}

NLSState NLSState::zero(int K, double t) { return {K, t, std::vector<cplx>(static_cast<size_t>(2 * K + 1))}; }

double NLSState::mass() const {
  double m = 0.0;
  for (const auto& x : v) m += std::norm(x);
  return m;
}

int64_t nls_phase(int64_t k1, int64_t k2, int64_t k3) {
  int64_t k = -k1 + k2 + k3;
  return k * k + k1 * k1 - k2 * k2 - k3 * k3;
}

std::vector<cplx> nls_rhs(const NLSState& s, NLSSplit* split) {
  const int K = s.K;
  const size_t n = s.v.size();
  std::vector<cplx> nonres(n);
  std::vector<cplx> res(n);
  double mass = s.mass();
  for (int k = -K; k <= K; ++k) {
    cplx acc = 0.0;
    for (int k1 = -K; k1 <= K; ++k1) {
      for (int k2 = -K; k2 <= K; ++k2) {
        int k3 = k + k1 - k2;
        if (!s.in_range(k3) || k1 == k2 || k1 == k3) continue;
        double phase = static_cast<double>(nls_phase(k1, k2, k3)) * s.t;
        acc += std::exp(cplx(0.0, phase)) * std::conj(s.at(k1)) * s.at(k2) * s.at(k3);
      }
    }
    nonres[static_cast<size_t>(k + K)] = cplx(0.0, -1.0) * acc;
    // k1 = k2 or k1 = k3 (counted once when all three agree)
    res[static_cast<size_t>(k + K)] = cplx(0.0, -1.0) * (2.0 * mass - std::norm(s.at(k))) * s.at(k);
  }
  std::vector<cplx> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = nonres[i] + res[i];
  if (split) *split = {std::move(nonres), std::move(res)};
  return out;
}

std::vector<cplx> nls_full_convolution(const NLSState& s) {
  const int K = s.K;
  std::vector<cplx> out(s.v.size());
  for (int k = -K; k <= K; ++k) {
    cplx acc = 0.0;
    for (int k1 = -K; k1 <= K; ++k1) {
      for (int k2 = -K; k2 <= K; ++k2) {
        int k3 = k + k1 - k2;
        if (!s.in_range(k3)) continue;
        double phase = static_cast<double>(nls_phase(k1, k2, k3)) * s.t;
        acc += std::exp(cplx(0.0, phase)) * std::conj(s.at(k1)) * s.at(k2) * s.at(k3);
      }
    }
    out[static_cast<size_t>(k + K)] = cplx(0.0, -1.0) * acc;
  }
  return out;
}

namespace {

NLSState shifted(const NLSState& s, const std::vector<cplx>& d, double scale, double dt) {
  NLSState r = s;
  r.t = s.t + dt;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += scale * d[i];
  return r;
}

}  // namespace

NLSState integrate(const NLSState& s0, double t_end, int steps) {
  if (steps <= 0) throw std::invalid_argument("integrate needs a positive step count");
  NLSState s = s0;
  const double h = (t_end - s0.t) / steps;
  for (int i = 0; i < steps; ++i) {
    double t = s0.t + h * i;
    s.t = t;
    auto k1 = nls_rhs(s);
    auto k2 = nls_rhs(shifted(s, k1, h / 2, h / 2));
    auto k3 = nls_rhs(shifted(s, k2, h / 2, h / 2));
    auto k4 = nls_rhs(shifted(s, k3, h, h));
    for (size_t j = 0; j < s.v.size(); ++j) {
      s.v[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      if (!std::isfinite(s.v[j].real()) || !std::isfinite(s.v[j].imag())) {
        throw std::runtime_error("integration produced a non-finite coefficient");
      }
    }
  }
  s.t = t_end;
  return s;
}

}  // namespace arbor
