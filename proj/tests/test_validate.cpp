#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "arbor/enumeration.hpp"
#include "arbor/nls.hpp"
#include "arbor/oscillatory.hpp"
#include "arbor/suites.hpp"
#include "arbor/validate.hpp"
#include "fixtures.hpp"

using namespace arbor;

namespace {

const cplx kI(0.0, 1.0);

double max_diff(const NLSState& a, const NLSState& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) d = std::max(d, std::abs(a.v[i] - b.v[i]));
  return d;
}

}  // namespace

TEST(NLS, ZeroData) {
  for (const auto& x : nls_rhs(NLSState::zero(3))) EXPECT_EQ(x, cplx(0.0));
}

TEST(NLS, SingleMode) {
  cplx v0(0.6, -0.8);
  NLSState s(0, 0.5, {v0});
  NLSSplit split;
  auto rhs = nls_rhs(s, &split);
  EXPECT_LT(std::abs(rhs[0] - (-kI * std::norm(v0) * v0)), 1e-15);
  EXPECT_EQ(split.nonresonant[0], cplx(0.0));
}

TEST(NLS, Phase) {
  EXPECT_EQ(nls_phase(1, 2, 3), 2 * (1 - 2) * (1 - 3));
  EXPECT_EQ(nls_phase(4, 4, 7), 0);
}

TEST(NLS, SplitRecombines) {
  for (int K = 0; K <= 3; ++K) {
    for (double t : {0.0, 0.3}) EXPECT_LE(split_recombination_error(random_state(K, 40 + K, t)), 1e-12);
  }
}

TEST(NLS, MassIsConserved) {
  auto s0 = random_state(2, 6);
  for (double t : {0.02, 0.05, 0.1}) EXPECT_LE(std::abs(integrate(s0, t, 200).mass() - 1.0), 1e-8);
}

TEST(NLS, RungeKuttaIsFourthOrder) {
  auto s0 = random_state(2, 12);
  double T = 0.5;
  auto ref = integrate(s0, T, 4096);
  double e1 = max_diff(integrate(s0, T, 16), ref);
  double e2 = max_diff(integrate(s0, T, 32), ref);
  EXPECT_NEAR(e1 / e2, 16.0, 1.6);
}

TEST(NLS, IntegratesBackwards) {
  auto s0 = random_state(2, 13, 0.2);
  auto back = integrate(integrate(s0, 0.3, 64), 0.2, 64);
  EXPECT_LE(max_diff(back, s0), 1e-9);
}

TEST(RandomState, UnitMassAndDeterministic) {
  auto a = random_state(2, 99);
  EXPECT_NEAR(a.mass(), 1.0, 1e-14);
  EXPECT_EQ(a.v, random_state(2, 99).v);
  EXPECT_NE(a.v, random_state(2, 100).v);
}

TEST(PowerFit, RecoversExponent) {
  std::vector<double> hs{1e-2, 5e-3, 2.5e-3};
  std::vector<double> res;
  for (double h : hs) res.push_back(3.0 * h * h);
  EXPECT_NEAR(fit_power(hs, res).exponent, 2.0, 1e-12);
}

TEST(OrderConditions, SeriesConverges) {
  auto v0 = random_state(2, 1);
  auto samples = order_condition_test(1, v0, {1e-2, 5e-3, 2.5e-3});
  ASSERT_EQ(samples.size(), 3u);
  for (size_t i = 1; i < samples.size(); ++i) {
    EXPECT_GE(samples[i].ratio, 3.2);
    EXPECT_LE(samples[i].ratio, 4.8);
  }
}

TEST(Quadrature, MatchesPiMapOnOrderTwo) {
  std::mt19937_64 rng(5);
  TreeSpaceSpec spec;
  spec.order = 2;
  spec.constrain_root = false;
  for (const auto& t : gen_T0(spec)) {
    auto a = random_nonresonant_assignment(t, rng, 3, 1000);
    ASSERT_TRUE(a.has_value());
    PiOptions opt;
    opt.at = &*a;
    EXPECT_LE(std::abs(pi_map(t, opt).eval(*a, 0.37) - pi_quadrature(t, *a, 0.37)), 1e-10) << t.encoding();
  }
}

TEST(DtUpsilon, SecondOrderResidual) {
  auto v = random_state(2, 3);
  auto t = fixtures::tree(fixtures::kT1);
  FreqAssignment a{{1, 1}, {2, -1}, {3, 2}};
  std::vector<double> hs{1e-3, 5e-4, 2.5e-4};
  std::vector<double> res;
  for (double h : hs) res.push_back(dt_upsilon_fd_residual(t, a, v, h));
  auto fit = fit_power(hs, res);
  EXPECT_GE(fit.exponent, 1.8);
  EXPECT_LE(fit.exponent, 2.2);
}

TEST(Suites, Registry) {
  const auto& names = suite_names();
  for (std::string n : {"hopf-morphism", "new-identity-arb", "identi-c", "psi-tilde-character", "antipode", "duality",
                        "theorem-n1", "series-order"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(run_suite("nope", SuiteOptions{}), std::invalid_argument);
}

TEST(Suites, FastSuitesPass) {
  SuiteOptions o;
  o.max_order = 2;
  o.max_nodes = 4;
  o.maxlen = 3;
  o.pairs = 20;
  for (std::string n : {"coassociativity", "antipode", "hopf-morphism", "new-identity-arb", "identi-c", "hairer-kelly"}) {
    auto r = run_suite(n, o);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_GT(r.cases, 0u) << n;
  }
}
