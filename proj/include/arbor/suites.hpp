#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

struct SuiteOptions {
  int max_order = 3;     // Fourier trees
  int max_nodes = 5;     // generic trees
  int maxlen = 4;        // words
  int pairs = 200;       // random word pairs
  uint64_t seed = 1;
  int K = 2;
  std::vector<int64_t> cutoffs{0, 10};
  std::vector<double> times{0.1, 0.37};
  int samples = 20;
  int r = 1;
  std::vector<double> series_times{1e-2, 5e-3, 2.5e-3};
  double tol = 1e-9;
  double agree_tol = 1e-10;
};

struct SuiteReport {
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  size_t cases = 0;
  size_t failures = 0;
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;  // first failures and witnesses

  void fail(const std::string& msg);
};

SuiteReport suite_coassociativity(const SuiteOptions& o);
SuiteReport suite_antipode(const SuiteOptions& o);
SuiteReport suite_hopf_morphism(const SuiteOptions& o);
SuiteReport suite_new_identity_arb(const SuiteOptions& o);
SuiteReport suite_identi_c(const SuiteOptions& o);
SuiteReport suite_duality(const SuiteOptions& o);
SuiteReport suite_hairer_kelly(const SuiteOptions& o);
SuiteReport suite_psi_tilde_character(const SuiteOptions& o);
SuiteReport suite_theorem_n1(const SuiteOptions& o);
SuiteReport suite_series_order(const SuiteOptions& o);
SuiteReport suite_pi_quadrature(const SuiteOptions& o);
SuiteReport suite_dt_upsilon_order(const SuiteOptions& o);
SuiteReport suite_structure(const SuiteOptions& o);

// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace arbor
