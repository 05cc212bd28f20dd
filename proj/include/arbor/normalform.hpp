#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "arbor/enumeration.hpp"
#include "arbor/hopf.hpp"
#include "arbor/nls.hpp"
#include "arbor/oscillatory.hpp"

namespace arbor {

struct VFactor {
  FreqVector freq;
  int parity = 0;  // 1 is the conjugate coefficient
};

struct VMonomial {
  int64_t coeff = 1;
  std::vector<VFactor> factors;

  cplx eval(const FreqAssignment& a, const NLSState& v) const;
  // Leibniz rule with the given time derivative of every coefficient.
  cplx eval_dt(const FreqAssignment& a, const NLSState& v, const std::vector<cplx>& dv) const;
  std::string str() const;
  std::string latex() const;
};

// Coefficient 2^(number of arity-3 nodes) times one factor per leaf.
// Throws std::invalid_argument on other arities.
VMonomial upsilon(const DecoratedTree& t);

// (-1)^(number of (t2,1) edges).
int conjugation_sign(const DecoratedTree& t);

std::vector<FreqPolynomial> letter_phases(const Word& w, const Dispersion& d = {});

// exp(i sum F t) / prod of stored-prefix sums. Throws std::domain_error when a
// prefix sum vanishes identically.
OscillatorySum psi_tilde(const Word& w, const Dispersion& d = {});
OscillatorySum psi_tilde_phases(const std::vector<FreqPolynomial>& phases);
OscillatorySum psi_tilde(const WordComb& w, const Dispersion& d = {});

// Cutoff version at a concrete assignment: zero as soon as some stored-prefix
// sum has absolute value at most N.
OscillatorySum psi(const Word& w, const FreqAssignment& a, int64_t N, const Dispersion& d = {});
cplx psi_value(const std::vector<int64_t>& phases, int64_t N, double t);

// The leaf-most (last stored) letter is split off:
// exp(i F(last) t) Psi(rest) / (total phase). Symbolic when a is null, in
// which case Psi is replaced by Psi-tilde.
OscillatorySum psi_hat(const Word& w, const FreqAssignment* a = nullptr, int64_t N = 0, const Dispersion& d = {});
// total * psi_hat, which stays finite when the total phase vanishes.
cplx psi_hat_scaled_value(const std::vector<int64_t>& phases, int64_t N, double t);

// Truncated tree series over T0 trees of order <= r with root frequency k,
// evaluated with the initial data v (truncation v.K) at time t.
cplx tree_series_U(int r, int64_t k, const NLSState& v, double t);
std::vector<cplx> tree_series_U(int r, int64_t k, const NLSState& v, const std::vector<double>& ts);

enum class NFKind { N0, R, N, N2, N1 };
std::string nf_kind_name(NFKind k);
std::optional<NFKind> parse_nf_kind(const std::string& s);

enum class Character {
  One,           // 1
  Phase,         // exp(i phase t)
  Psi,           // Psi(w)
  IFPsi,         // i F(w) Psi(w)
  IPsiHatScaled  // i F(w) Psi-hat(w)
};
std::string character_name(Character c);

struct Summand {
  NFKind kind = NFKind::N0;
  DecoratedTree tree{kPlain, FreqVector()};
  Scalar weight;  // signs, factors of i, and 1/S
  VMonomial upsilon;
  std::vector<NodePath> nonresonant;  // T2 nodes checked at every assignment
  std::vector<std::pair<FreqVector, FreqVector>> distinct;
  Character character = Character::One;
  WordComb words;
  FreqPolynomial phase;
};
using SummandCollection = std::vector<Summand>;

// Order n terms with root frequency k. Order 1 of N and R is the equation
// itself (factor -i); from order 2 on they carry the factor i of the
// recursion. N1 is N minus N2.
SummandCollection normal_form_terms(int n, NFKind kind);

// Right-hand side of the time derivative of the monomial of t: grafts of
// order-one cherries on every compatible leaf. The symbols of t stay fixed
// and the new leaves get fresh symbols.
SummandCollection dt_upsilon_expansion(const DecoratedTree& t);

struct EvalContext {
  const NLSState* v = nullptr;
  int64_t N = 0;
  double t = 0.0;
};

// Sum over assignments of the symbols not fixed by base, each in [-K, K],
// with every node frequency in [-K, K] and the pointwise side conditions.
cplx evaluate(const SummandCollection& c, const FreqAssignment& base, const EvalContext& ctx);
// Time derivative: Leibniz on the monomial with the given derivative of the
// coefficients plus the symbolic derivative of the character.
cplx evaluate_dt(const SummandCollection& c, const FreqAssignment& base, const EvalContext& ctx, const std::vector<cplx>& dv);

struct TheoremTerms {
  cplx n2;   // N2 at order n
  cplx dn0;  // time derivative of N0 at order n
  cplx n;    // N at order n+1
  cplx r;    // R at order n+1
  double residual() const { return std::abs(n2 - dn0 - n - r); }
};

TheoremTerms theorem_check(int n, int64_t k, const NLSState& v, int64_t N);

}  // namespace arbor
