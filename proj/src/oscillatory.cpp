#include "arbor/oscillatory.hpp"

#include <cmath>
#include <stdexcept>

namespace arbor {

namespace {

bool time_poly_zero(const TimePoly& q) {
  for (const auto& c : q) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void trim(TimePoly& q) {
  while (!q.empty() && q.back().is_zero()) q.pop_back();
}

TimePoly add(const TimePoly& a, const TimePoly& b) {
  TimePoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

TimePoly mul(const TimePoly& a, const TimePoly& b) {
  if (a.empty() || b.empty()) return {};
  TimePoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

TimePoly derivative(const TimePoly& q) {
  TimePoly r;
  for (size_t i = 1; i < q.size(); ++i) r.push_back(q[i].scaled(Scalar(static_cast<int64_t>(i))));
  trim(r);
  return r;
}

}  // namespace

OscillatorySum::OscillatorySum(const RationalFunction& c) {
  if (!c.is_zero()) terms_.emplace(FreqPolynomial(), TimePoly{c});
}

OscillatorySum OscillatorySum::exp_phase(const FreqPolynomial& phase, const RationalFunction& c) {
  OscillatorySum s;
  s.add_term(phase, TimePoly{c});
  return s;
}

OscillatorySum OscillatorySum::time(const RationalFunction& c) {
  OscillatorySum s;
  s.add_term(FreqPolynomial(), TimePoly{RationalFunction(), c});
  return s;
}

void OscillatorySum::add_term(const FreqPolynomial& phase, const TimePoly& q) {
  if (time_poly_zero(q)) return;
  auto it = terms_.find(phase);
  if (it == terms_.end()) {
    TimePoly t = q;
    trim(t);
    terms_.emplace(phase, std::move(t));
    return;
  }
  it->second = add(it->second, q);
  if (it->second.empty()) terms_.erase(it);
}

OscillatorySum operator+(const OscillatorySum& a, const OscillatorySum& b) {
  OscillatorySum r = a;
  for (const auto& [p, q] : b.terms_) r.add_term(p, q);
  return r;
}

OscillatorySum operator*(const OscillatorySum& a, const OscillatorySum& b) {
  OscillatorySum r;
  for (const auto& [pa, qa] : a.terms_) {
    for (const auto& [pb, qb] : b.terms_) r.add_term(pa + pb, mul(qa, qb));
  }
  return r;
}

OscillatorySum OscillatorySum::scaled(const RationalFunction& c) const {
  OscillatorySum r;
  for (const auto& [p, q] : terms_) r.add_term(p, mul(q, TimePoly{c}));
  return r;
}

OscillatorySum OscillatorySum::ddt() const {
  OscillatorySum r;
  for (const auto& [p, q] : terms_) {
    // (Q' + iPQ) e^{iPt}
    RationalFunction ip = RationalFunction(p).scaled(Scalar::i());
    r.add_term(p, add(derivative(q), mul(q, TimePoly{ip})));
  }
  return r;
}

OscillatorySum OscillatorySum::integrate_0_to_t() const {
  OscillatorySum r;
  for (const auto& [p, q] : terms_) {
    if (p.is_zero()) {
      TimePoly out(q.size() + 1);
      for (size_t j = 0; j < q.size(); ++j) out[j + 1] = q[j].scaled(Scalar(Rational(1, static_cast<int64_t>(j + 1))));
      r.add_term(p, out);
      continue;
    }
    // Antiderivative A e^{iPs} with A = sum_m (-1)^m Q^(m) / (iP)^(m+1).
    TimePoly anti;
    TimePoly deriv = q;
    RationalFunction inv = RationalFunction::reciprocal(p).scaled(Scalar(0) - Scalar::i());  // 1/(iP)
    RationalFunction factor = inv;
    int sign = 1;
    while (!deriv.empty()) {
      anti = add(anti, mul(deriv, TimePoly{factor.scaled(Scalar(sign))}));
      deriv = derivative(deriv);
      factor = factor * inv;
      sign = -sign;
    }
    r.add_term(p, anti);
    if (!anti.empty()) r.add_term(FreqPolynomial(), TimePoly{-anti[0]});
  }
  return r;
}

std::complex<double> OscillatorySum::eval(const FreqAssignment& a, double t) const {
  std::complex<double> total = 0.0;
  for (const auto& [p, q] : terms_) {
    std::complex<double> qt = 0.0;
    double tp = 1.0;
    for (const auto& c : q) {
      if (!c.is_zero()) qt += c.eval(a).to_complex() * tp;
      tp *= t;
    }
    double phase = p.eval(a).to_complex().real();
    total += qt * std::exp(std::complex<double>(0.0, phase * t));
  }
  return total;
}

bool operator==(const OscillatorySum& a, const OscillatorySum& b) {
  auto diff = a - b;
  return diff.is_zero();
}

namespace {

std::string render_sum(const OscillatorySum::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [p, q] : terms) {
    std::string qs;
    for (size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) continue;
      if (!qs.empty()) qs += " + ";
      qs += "(" + (latex ? q[j].latex() : q[j].str()) + ")";
      if (j == 1) qs += latex ? " t" : "·t";
      if (j > 1) qs += latex ? " t^{" + std::to_string(j) + "}" : "·t^" + std::to_string(j);
    }
    if (!out.empty()) out += " + ";
    if (p.is_zero()) {
      out += q.size() > 1 ? "[" + qs + "]" : qs;
    } else if (latex) {
      out += "\\left[" + qs + "\\right] e^{i (" + p.latex() + ") t}";
    } else {
      out += "[" + qs + "]·exp(i·(" + p.str() + ")·t)";
    }
  }
  return out;
}

}  // namespace

std::string OscillatorySum::str() const { return render_sum(terms_, false); }
std::string OscillatorySum::latex() const { return render_sum(terms_, true); }

// ---------------------------------------------------------------- Pi

namespace {

FreqPolynomial phase_of(const DecoratedTree& t, const PiOptions& opt) {
  if (opt.at) return FreqPolynomial(Scalar(edge_phase_value(t.deco(), t.freq().eval(*opt.at), opt.dispersion)));
  return edge_phase(t.deco(), t.freq(), opt.dispersion);
}

}  // namespace

OscillatorySum pi_map(const Forest& f, const PiOptions& opt) {
  OscillatorySum r(RationalFunction(1));
  for (const auto& t : f.trees()) r = r * pi_map(t, opt);
  return r;
}

OscillatorySum pi_map(const DecoratedTree& t, const PiOptions& opt) {
  OscillatorySum inner = pi_map(Forest(t.children()), opt);
  OscillatorySum e = OscillatorySum::exp_phase(phase_of(t, opt));
  if (t.deco().kind == EdgeKind::T1) return e * inner;
  Scalar factor = Scalar(0) - Scalar::i();
  if (t.deco().parity == 1) factor = -factor;
  RationalFunction c(factor);
  if (opt.multiplier) {
    if (opt.at) {
      c = c * RationalFunction(FreqPolynomial(opt.multiplier(t.freq()).eval(*opt.at)));
    } else {
      c = c * RationalFunction(opt.multiplier(t.freq()));
    }
  }
  return (e * inner).integrate_0_to_t().scaled(c);
}

}  // namespace arbor
