#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "arbor/enumeration.hpp"
#include "arbor/normalform.hpp"
#include "arbor/suites.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string summary(const SuiteReport& r) {
  std::ostringstream os;
  os << r.name << " " << r.cases << " cases " << r.failures << " failures";
  for (const auto& [k, v] : r.metrics) os << " " << k << "=" << v;
  for (const auto& n : r.notes) os << " [" << n << "]";
  return os.str();
}

const char* kT0 = "I[(t1,0)](k)";
const char* kT1 = "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3)))";
const char* kT2 =
    "I[(t1,0)](-k1+k2+k3-k4+k5; I[(t2,0)](-k1+k2+k3-k4+k5; I[(t1,1)](k4), I[(t1,0)](k5), "
    "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3)))))";
const char* kT3 =
    "I[(t1,0)](k1-k2-k3+k4+k5; I[(t2,0)](k1-k2-k3+k4+k5; I[(t1,0)](k4), I[(t1,0)](k5), "
    "I[(t1,1)](-k1+k2+k3; I[(t2,1)](-k1+k2+k3; I[(t1,0)](k1), I[(t1,1)](k2), I[(t1,1)](k3)))))";
const char* kExample = "I[(t2,0)](-k1+k2+k3; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3))";

bool has_parities(const VMonomial& m, int conj, int plain) {
  int c = 0;
  int p = 0;
  for (const auto& f : m.factors) (f.parity == 1 ? c : p) += 1;
  return c == conj && p == plain;
}

void golden_values() {
  std::ostringstream os;
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      os << " mismatch:" << what;
    }
  };
  auto t0 = DecoratedTree::parse(kT0);
  auto t1 = DecoratedTree::parse(kT1);
  auto t2 = DecoratedTree::parse(kT2);
  auto t3 = DecoratedTree::parse(kT3);
  check(symmetry_factor(t0) == 1 && symmetry_factor(t1) == 2 && symmetry_factor(t2) == 2 && symmetry_factor(t3) == 4, "S");

  auto u0 = upsilon(t0);
  check(u0.coeff == 1 && u0.factors.size() == 1 && u0.factors[0].freq == FreqVector::symbol(0) && has_parities(u0, 0, 1),
        "Upsilon(T0)");
  auto u1 = upsilon(t1);
  bool u1_ok = u1.coeff == 2 && has_parities(u1, 1, 2);
  for (const auto& f : u1.factors) u1_ok = u1_ok && (f.parity == 1) == (f.freq == FreqVector::symbol(1));
  check(u1_ok, "Upsilon(T1)");
  auto u3 = upsilon(t3);
  check(u3.coeff == 4 && has_parities(u3, 2, 3), "Upsilon(T3)");

  auto k = [](Symbol s) { return FreqPolynomial::symbol(s); };
  FreqPolynomial l = k(2) + k(3) - k(1);
  FreqPolynomial expected = l * l + k(1) * k(1) - k(2) * k(2) - k(3) * k(3);
  check(freq_F(DecoratedTree::parse(kExample)) == expected, "F");

  TreeSpaceSpec spec;
  spec.up_to = true;
  std::set<std::string> shapes;
  spec.order = 1;
  for (const auto& t : gen_T0(spec)) shapes.insert(t.shape());
  size_t n1 = shapes.size();
  shapes.clear();
  spec.order = 2;
  for (const auto& t : gen_T0(spec)) shapes.insert(t.shape());
  size_t n2 = shapes.size();
  check(n1 == 2 && n2 == 4, "enumeration sizes");
  check(shapes == std::set<std::string>{t0.shape(), t1.shape(), t2.shape(), t3.shape()}, "enumerated shapes");
  os << " S=(1,2,2,4) Upsilon(T1)=" << u1.str() << " Upsilon(T3)=" << u3.str() << " F=" << freq_F(DecoratedTree::parse(kExample)).str()
     << " |T0<=1|=" << n1 << " |T0<=2|=" << n2;
  report(1, "golden values", ok, os.str());
}

void run(int id, const std::string& name, const std::vector<std::string>& suites, double budget,
         const std::function<void(SuiteOptions&)>& tweak = nullptr,
         const std::function<bool(const SuiteReport&)>& extra = nullptr) {
  SuiteOptions o;
  if (tweak) tweak(o);
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& s : suites) {
    auto r = run_suite(s, o);
    ok = ok && r.passed && r.cases > 0 && (!extra || extra(r));
    detail += summary(r) + "; ";
  }
  double secs = seconds_since(t0);
  ok = ok && secs < budget;
  std::ostringstream os;
  os << detail << "time " << secs << " s (limit " << budget << " s)";
  report(id, name, ok, os.str());
}

bool ratios_within(const SuiteReport& r, double lo, double hi) {
  int seen = 0;
  for (const auto& [k, v] : r.metrics) {
    if (k.rfind("ratio_", 0) != 0) continue;
    ++seen;
    if (!(v >= lo && v <= hi)) return false;
  }
  return seen == 2;
}

}  // namespace

int main() {
  golden_values();
  run(2, "hopf identities",
      {"coassociativity", "antipode", "hopf-morphism", "new-identity-arb", "identi-c", "duality", "hairer-kelly"}, 60.0);
  run(3, "psi-tilde character", {"psi-tilde-character"}, 1e9, nullptr,
      [](const SuiteReport& r) { return r.metrics.count("witness_gap") != 0; });
  run(4, "series order r=1", {"series-order"}, 60.0, [](SuiteOptions& o) { o.r = 1; },
      [](const SuiteReport& r) { return ratios_within(r, 3.2, 4.8); });
  run(4, "series order r=2", {"series-order"}, 60.0, [](SuiteOptions& o) { o.r = 2; },
      [](const SuiteReport& r) { return ratios_within(r, 6.4, 9.6); });
  run(5, "normal-form recursion at n=1", {"theorem-n1"}, 120.0, nullptr, [](const SuiteReport& r) {
    return r.cases == 20 && r.metrics.at("max_residual") <= 1e-9 && r.metrics.at("max_agreement") <= 1e-10;
  });
  run(6, "iterated integrals vs quadrature", {"pi-quadrature"}, 1e9, nullptr,
      [](const SuiteReport& r) { return r.metrics.at("max_error") <= 1e-10; });
  run(7, "derivative expansion residual order", {"dt-upsilon-order"}, 1e9, nullptr, [](const SuiteReport& r) {
    return r.metrics.at("min_exponent") >= 1.8 && r.metrics.at("max_exponent") <= 2.2;
  });
  run(8, "structural invariants", {"structure"}, 1e9);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
