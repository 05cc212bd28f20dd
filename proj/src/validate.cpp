#include "arbor/validate.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace arbor {

namespace {

const cplx kI(0.0, 1.0);

}  // namespace

NLSState random_state(int K, uint64_t seed, double t) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  NLSState s = NLSState::zero(K, t);
  for (auto& x : s.v) x = {nd(rng), nd(rng)};
  double m = std::sqrt(s.mass());
  for (auto& x : s.v) x /= m;
  return s;
}

double split_recombination_error(const NLSState& s) {
  NLSSplit split;
  auto rhs = nls_rhs(s, &split);
  auto full = nls_full_convolution(s);
  double err = 0.0;
  for (size_t i = 0; i < full.size(); ++i) {
    err = std::max(err, std::abs(split.nonresonant[i] + split.resonant[i] - full[i]));
    err = std::max(err, std::abs(rhs[i] - full[i]));
  }
  return err;
}

std::vector<OrderSample> order_condition_test(int r, const NLSState& v0, const std::vector<double>& ts, int steps) {
  std::vector<std::vector<cplx>> series;
  for (int64_t k = -v0.K; k <= v0.K; ++k) series.push_back(tree_series_U(r, k, v0, ts));
  std::vector<OrderSample> out;
  for (size_t i = 0; i < ts.size(); ++i) {
    NLSState s = integrate(v0, ts[i], steps);
    OrderSample o;
    o.t = ts[i];
    for (int64_t k = -v0.K; k <= v0.K; ++k) {
      cplx u = std::exp(cplx(0.0, -ts[i] * static_cast<double>(k * k))) * s.at(k);
      o.error = std::max(o.error, std::abs(u - series[static_cast<size_t>(k + v0.K)][i]));
    }
    if (!out.empty()) o.ratio = out.back().error / o.error;
    out.push_back(o);
  }
  return out;
}

double dt_upsilon_fd_residual(const DecoratedTree& t, const FreqAssignment& a, const NLSState& at_t0, double h) {
  VMonomial ups = upsilon(t);
  NLSState plus = integrate(at_t0, at_t0.t + h, 8);
  NLSState minus = integrate(at_t0, at_t0.t - h, 8);
  cplx fd = (ups.eval(a, plus) - ups.eval(a, minus)) / (2.0 * h);
  EvalContext ctx{&at_t0, 0, at_t0.t};
  cplx rhs = evaluate(dt_upsilon_expansion(t), a, ctx);
  return std::abs(fd - rhs);
}

PowerFit fit_power(const std::vector<double>& hs, const std::vector<double>& residuals) {
  if (hs.size() != residuals.size() || hs.size() < 2) throw std::invalid_argument("power fit needs matching samples");
  double n = static_cast<double>(hs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < hs.size(); ++i) {
    double x = std::log(hs[i]);
    double y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return {residuals, (n * sxy - sx * sy) / (n * sxx - sx * sx)};
}

DecompositionTerms bruteforce_decomposition(int64_t k, const NLSState& v, int64_t N) {
  auto dv = nls_rhs(v);
  auto d = [&](int64_t j) { return v.in_range(j) ? dv[static_cast<size_t>(j + v.K)] : cplx(0.0); };
  DecompositionTerms out;
  for (int64_t k1 = -v.K; k1 <= v.K; ++k1) {
    for (int64_t k2 = -v.K; k2 <= v.K; ++k2) {
      int64_t k3 = k + k1 - k2;
      if (!v.in_range(k3) || k1 == k2 || k1 == k3) continue;
      int64_t phi = nls_phase(k1, k2, k3);
      if (std::llabs(phi) <= N) continue;
      cplx e = std::exp(cplx(0.0, static_cast<double>(phi) * v.t));
      cplx w = std::conj(v.at(k1)) * v.at(k2) * v.at(k3);
      cplx dw = std::conj(d(k1)) * v.at(k2) * v.at(k3) + std::conj(v.at(k1)) * d(k2) * v.at(k3) +
                std::conj(v.at(k1)) * v.at(k2) * d(k3);
      double inv = 1.0 / static_cast<double>(phi);
      out.n2 += kI * e * w;
      out.dn0 += kI * e * w + e * inv * dw;
      out.ntilde -= e * inv * dw;
    }
  }
  return out;
}

namespace {

using Fn = std::function<cplx(double)>;

double integrate_real(const std::function<double(double)>& f, double t) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, t, 8, 1e-13);
}

Fn pi_function(const DecoratedTree& t, const FreqAssignment& a) {
  std::vector<Fn> kids;
  for (const auto& c : t.children()) kids.push_back(pi_function(c, a));
  double phase = static_cast<double>(edge_phase_value(t.deco(), t.freq().eval(a)));
  auto inner = [kids, phase](double s) {
    cplx v = std::exp(cplx(0.0, phase * s));
    for (const auto& k : kids) v *= k(s);
    return v;
  };
  if (t.deco().kind == EdgeKind::T1) return inner;
  cplx factor = t.deco().parity == 1 ? kI : -kI;
  return [inner, factor](double time) {
    if (time == 0.0) return cplx(0.0);
    double re = integrate_real([&](double s) { return inner(s).real(); }, time);
    double im = integrate_real([&](double s) { return inner(s).imag(); }, time);
    return factor * cplx(re, im);
  };
}

}  // namespace

cplx pi_quadrature(const DecoratedTree& t, const FreqAssignment& a, double time) { return pi_function(t, a)(time); }

std::optional<FreqAssignment> random_nonresonant_assignment(const DecoratedTree& t, std::mt19937_64& rng, int64_t range,
                                                            int max_tries) {
  std::uniform_int_distribution<int64_t> dist(-range, range);
  auto syms = tree_symbols(t);
  for (int i = 0; i < max_tries; ++i) {
    FreqAssignment a;
    for (Symbol s : syms) a.set(s, dist(rng));
    bool ok = true;
    for_each_node(t, [&](const NodePath&, const DecoratedTree& n) {
      if (n.deco().kind != EdgeKind::T2 || n.is_leaf()) return;
      if (local_phase(n).eval(a).is_zero()) ok = false;
    });
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace arbor
