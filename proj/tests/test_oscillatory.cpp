#include <gtest/gtest.h>

#include <cmath>

#include "arbor/oscillatory.hpp"
#include "arbor/validate.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::tree;

namespace {

const cplx kI(0.0, 1.0);

FreqPolynomial k(Symbol s) { return FreqPolynomial::symbol(s); }

FreqPolynomial cherry_phase() {
  return poly_square_of_linear(FreqVector::parse("-k1+k2+k3")) + k(1) * k(1) - k(2) * k(2) - k(3) * k(3);
}

}  // namespace

TEST(PiMap, Leaves) {
  auto leaf = tree("I[(t1,0)](k2)");
  EXPECT_EQ(pi_map(leaf), OscillatorySum::exp_phase(-(k(2) * k(2))));
  EXPECT_EQ(pi_map(tree(fixtures::kT0)), OscillatorySum::exp_phase(-(k(0) * k(0))));
  EXPECT_EQ(pi_map(Forest()), OscillatorySum(RationalFunction(1)));
}

TEST(PiMap, BlueCherry) {
  FreqPolynomial phi = cherry_phase();
  OscillatorySum expected = OscillatorySum::exp_phase(phi, RationalFunction(-1, phi)) + RationalFunction(1, phi);
  auto got = pi_map(tree(fixtures::kCherry));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.terms().size(), 2u);
}

TEST(PiMap, BlueCherryMatchesQuadrature) {
  auto t = tree(fixtures::kCherry);
  FreqAssignment a{{1, 1}, {2, 3}, {3, -2}};
  for (double time : {0.3, 1.1}) {
    cplx exact = pi_map(t).eval(a, time);
    EXPECT_LT(std::abs(exact - pi_quadrature(t, a, time)), 1e-12);
  }
}

TEST(PiMap, AssignedModeHandlesZeroPhase) {
  auto t = tree(fixtures::kCherry);
  FreqAssignment a{{1, 2}, {2, 2}, {3, 5}};
  PiOptions opt;
  opt.at = &a;
  EXPECT_LT(std::abs(pi_map(t, opt).eval(a, 0.4) - cplx(0.0, -0.4)), 1e-15);
  EXPECT_THROW(pi_map(t).eval(a, 0.4), std::domain_error);
}

TEST(Integrate, Examples) {
  EXPECT_EQ(OscillatorySum(RationalFunction(1)).integrate_0_to_t(), OscillatorySum::time());
  FreqPolynomial p = k(1);
  RationalFunction inv_ip = RationalFunction(1, p).scaled(-Scalar::i());
  OscillatorySum expected = OscillatorySum::exp_phase(p, inv_ip) - OscillatorySum(inv_ip);
  EXPECT_EQ(OscillatorySum::exp_phase(p).integrate_0_to_t(), expected);
}

TEST(Integrate, TimeWeightedExponential) {
  FreqAssignment a{{1, 3}};
  OscillatorySum s = OscillatorySum::time() * OscillatorySum::exp_phase(k(1));
  double t = 0.7;
  double P = 3.0;
  cplx e = std::exp(kI * P * t);
  cplx expected = t / (kI * P) * e - (e - 1.0) / ((kI * P) * (kI * P));
  EXPECT_LT(std::abs(s.integrate_0_to_t().eval(a, t) - expected), 1e-14);
}

TEST(Integrate, DerivativeInvertsIntegral) {
  auto s = pi_map(tree(fixtures::kT2));
  EXPECT_EQ(s.integrate_0_to_t().ddt(), s);
  FreqAssignment a{{0, 1}, {1, 7}, {2, -3}, {3, 11}, {4, 2}, {5, -13}};
  EXPECT_LT(std::abs(s.integrate_0_to_t().eval(a, 0.0)), 1e-15);
}

TEST(Oscillatory, ProductAddsPhases) {
  auto a = OscillatorySum::exp_phase(k(1));
  auto b = OscillatorySum::exp_phase(k(2));
  EXPECT_EQ(a * b, OscillatorySum::exp_phase(k(1) + k(2)));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Oscillatory, EvalMatchesClosedForm) {
  auto s = OscillatorySum::exp_phase(k(1), RationalFunction(1, k(2))) + OscillatorySum::time(RationalFunction(2));
  FreqAssignment a{{1, 4}, {2, 5}};
  double t = 0.25;
  EXPECT_LT(std::abs(s.eval(a, t) - (std::exp(kI * 4.0 * t) / 5.0 + 2.0 * t)), 1e-15);
}
