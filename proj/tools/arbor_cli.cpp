#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/hopf.hpp"
#include "arbor/normalform.hpp"
#include "arbor/suites.hpp"
#include "arbor/validate.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace arbor;

namespace {

enum class Format { Json, Latex, Ascii };

struct Config {
  std::string format = "json";
  int t1_sign = -1;
  int t2_sign = 1;
  uint64_t seed = 1;
  int jobs = 1;

  Format fmt() const { return format == "latex" ? Format::Latex : format == "ascii" ? Format::Ascii : Format::Json; }
  Dispersion dispersion() const { return {t1_sign, t2_sign}; }
};

std::string path_str(const NodePath& p) {
  std::string s;
  for (size_t i : p) s += (s.empty() ? "" : ".") + std::to_string(i);
  return s.empty() ? "root" : s;
}

json pairs_json(const std::vector<std::pair<FreqVector, FreqVector>>& d) {
  json out = json::array();
  for (const auto& [a, b] : d) out.push_back({a.str(), b.str()});
  return out;
}

json words_json(const WordComb& w) {
  json out = json::array();
  for (const auto& [word, c] : w.terms()) {
    json letters = json::array();
    for (const auto& l : word) letters.push_back(l.encoding());
    out.push_back({{"word", word_str(word)}, {"letters", letters}, {"coeff", c.str()}});
  }
  return out;
}

std::string tree_text(const DecoratedTree& t, Format f) { return f == Format::Latex ? t.latex() : render(t, RenderFormat::Ascii); }

void print(const json& j, Format f, const std::string& plain) {
  if (f == Format::Json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << plain;
  }
}

json entry_json(const SpaceEntry& e, const Dispersion& d) {
  json j;
  j["encoding"] = e.tree.encoding();
  j["latex"] = e.tree.latex();
  j["order"] = order(e.tree);
  j["parity"] = e.tree.deco().parity;
  j["F"] = freq_F(e.tree, d).str();
  j["symmetry_factor"] = symmetry_factor(e.tree);
  j["upsilon"] = upsilon(e.tree).str();
  j["non_resonant"] = is_non_resonant(e.tree, d);
  j["pattern"] = e.pattern;
  j["resonant_node"] = e.resonant_node ? json(path_str(*e.resonant_node)) : json(nullptr);
  j["distinct"] = pairs_json(e.distinct);
  return j;
}

int cmd_enumerate(const Config& cfg, const std::string& space, int max_order, int exact_order, int parity, bool resonant,
                  bool free_root) {
  TreeSpaceSpec spec;
  spec.parity = parity;
  spec.constrain_root = !free_root;
  std::vector<SpaceEntry> entries;
  if (space == "T0") {
    if (resonant) throw CLI::ValidationError("--resonant", "T0 spaces are never resonant");
    spec.order = exact_order >= 0 ? exact_order : max_order;
    spec.up_to = exact_order < 0;
    for (auto& t : gen_T0(spec)) entries.push_back({t, {}, 0, std::nullopt});
  } else if (space == "That") {
    int lo = exact_order >= 0 ? exact_order : 1;
    int hi = exact_order >= 0 ? exact_order : max_order;
    spec.resonant = resonant;
    for (int m = std::max(lo, 1); m <= hi; ++m) {
      spec.order = m;
      for (auto& e : that_entries(spec)) entries.push_back(e);
    }
  } else {
    throw CLI::ValidationError("space", "unknown space '" + space + "', expected T0 or That");
  }
  json out = json::array();
  std::string plain;
  for (const auto& e : entries) {
    out.push_back(entry_json(e, cfg.dispersion()));
    plain += (cfg.fmt() == Format::Latex ? e.tree.latex() : e.tree.encoding()) + "\n";
  }
  print(out, cfg.fmt(), plain);
  return 0;
}

Mode parse_mode(const std::string& m) { return m == "generic" ? Mode::Generic : Mode::Fourier; }

int cmd_arborify(const Config& cfg, const std::string& text, const std::string& mode, const std::string& variant) {
  Forest f = Forest::parse(text);
  WordComb w = arborify(f, parse_mode(mode), variant == "adjoint" ? ArbVariant::Adjoint : ArbVariant::Coproduct);
  json out{{"input", f.encoding()}, {"mode", mode}, {"variant", variant}, {"words", words_json(w)}};
  std::string plain;
  for (const auto& [word, c] : w.terms()) {
    plain += c.str() + "  " + word_str(word, cfg.fmt() == Format::Latex ? RenderFormat::Latex : RenderFormat::Ascii) + "\n";
  }
  print(out, cfg.fmt(), plain);
  return 0;
}

int cmd_coproduct(const Config& cfg, const std::string& text, const std::string& mode, bool single_cut) {
  Forest f = Forest::parse(text);
  ForestTensor d;
  if (single_cut) {
    d = graft_adjoint(f.single(), parse_mode(mode));
  } else {
    d = bck_coproduct(f, parse_mode(mode));
  }
  json terms = json::array();
  std::string plain;
  for (const auto& [pair, c] : d.terms()) {
    terms.push_back({{"left", pair.first.encoding()}, {"right", pair.second.encoding()}, {"coeff", c.str()}});
    if (cfg.fmt() == Format::Latex) {
      plain += c.str() + "  " + pair.first.latex() + " \\otimes " + pair.second.latex() + "\n";
    } else {
      plain += c.str() + "  " + pair.first.encoding() + "  (x)  " + pair.second.encoding() + "\n";
    }
  }
  print({{"input", f.encoding()}, {"mode", mode}, {"single_cut", single_cut}, {"terms", terms}}, cfg.fmt(), plain);
  return 0;
}

json summand_json(const Summand& s) {
  json j;
  j["kind"] = nf_kind_name(s.kind);
  j["tree"] = s.tree.encoding();
  j["latex"] = s.tree.latex();
  j["symmetry_factor"] = symmetry_factor(s.tree);
  j["upsilon"] = s.upsilon.str();
  j["weight"] = s.weight.str();
  j["character"] = character_name(s.character);
  if (s.character == Character::Phase) j["phase"] = s.phase.str();
  j["words"] = words_json(s.words);
  json checks = json::array();
  for (const auto& p : s.nonresonant) checks.push_back(path_str(p));
  j["nonresonant_nodes"] = checks;
  j["distinct"] = pairs_json(s.distinct);
  return j;
}

int cmd_normal_form(const Config& cfg, int n, const std::string& kind_name) {
  auto kind = parse_nf_kind(kind_name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown kind '" + kind_name + "', expected N0, R, N, N2 or N1");
  json out = json::array();
  std::string plain;
  for (const auto& s : normal_form_terms(n, *kind)) {
    out.push_back(summand_json(s));
    std::string ups = cfg.fmt() == Format::Latex ? s.upsilon.latex() : s.upsilon.str();
    plain += s.weight.str() + "  " + ups + "  " + character_name(s.character) + "  " + tree_text(s.tree, cfg.fmt()) + "\n";
  }
  print(out, cfg.fmt(), plain);
  return 0;
}

json report_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.name;
  j["pass"] = r.passed;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["metrics"] = json::object();
  for (const auto& [k, v] : r.metrics) j["metrics"][k] = v;
  j["notes"] = r.notes;
  return j;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures << " failures)\n";
  for (const auto& [k, v] : r.metrics) os << "  " << k << " = " << v << '\n';
  for (const auto& n : r.notes) os << "  " << n << '\n';
  return os.str();
}

int emit_reports(const Config& cfg, const json& parameters, const std::vector<SuiteReport>& reports) {
  bool pass = true;
  json list = json::array();
  std::string plain;
  for (const auto& r : reports) {
    pass = pass && r.passed;
    list.push_back(report_json(r));
    plain += report_text(r);
  }
  print({{"parameters", parameters}, {"reports", list}, {"pass", pass}}, cfg.fmt(), plain);
  return pass ? 0 : 1;
}

int cmd_check(const Config& cfg, const std::string& identity, const SuiteOptions& o) {
  std::vector<std::string> names;
  if (identity == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), identity) == known.end()) {
      throw CLI::ValidationError("identity", "unknown identity '" + identity + "'");
    }
    names.push_back(identity);
  }
  std::vector<SuiteReport> reports;
  if (cfg.jobs > 1 && names.size() > 1) {
    std::vector<std::future<SuiteReport>> pending;
    for (size_t i = 0; i < names.size(); i += static_cast<size_t>(cfg.jobs)) {
      for (size_t j = i; j < std::min(names.size(), i + static_cast<size_t>(cfg.jobs)); ++j) {
        pending.push_back(std::async(std::launch::async, [&o, name = names[j]] { return run_suite(name, o); }));
      }
      for (auto& p : pending) reports.push_back(p.get());
      pending.clear();
    }
  } else {
    for (const auto& n : names) reports.push_back(run_suite(n, o));
  }
  json params{{"identity", identity}, {"seed", o.seed}, {"max_order", o.max_order}, {"max_nodes", o.max_nodes},
              {"maxlen", o.maxlen},   {"pairs", o.pairs}, {"K", o.K},                 {"r", o.r}};
  return emit_reports(cfg, params, reports);
}

int cmd_series_order(const Config& cfg, SuiteOptions o) {
  json params{{"r", o.r}, {"K", o.K}, {"seed", o.seed}, {"t", o.series_times}};
  return emit_reports(cfg, params, {suite_series_order(o)});
}

int cmd_check_theorem(const Config& cfg, int n, const SuiteOptions& o) {
  json params{{"n", n}, {"K", o.K}, {"N", o.cutoffs}, {"t", o.times}, {"samples", o.samples}, {"seed", o.seed}};
  if (n == 1) return emit_reports(cfg, params, {suite_theorem_n1(o)});
  SuiteReport r("theorem-n" + std::to_string(n));
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int64_t> kdist(-o.K, o.K);
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    int64_t k = kdist(rng);
    int64_t N = o.cutoffs[static_cast<size_t>(i) % o.cutoffs.size()];
    double t = o.times[(static_cast<size_t>(i) / o.cutoffs.size()) % o.times.size()];
    double res = theorem_check(n, k, random_state(o.K, o.seed * 1000 + static_cast<uint64_t>(i), t), N).residual();
    worst = std::max(worst, res);
    ++r.cases;
    if (!(res <= o.tol)) r.fail("k=" + std::to_string(k) + " N=" + std::to_string(N) + " residual " + std::to_string(res));
  }
  r.metrics["max_residual"] = worst;
  return emit_reports(cfg, params, {r});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decorated trees, arborification and normal forms for cubic NLS"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "latex", "ascii"}));
  app.add_option("--t1-sign", cfg.t1_sign, "Sign of the T1 dispersion polynomial");
  app.add_option("--t2-sign", cfg.t2_sign, "Sign of the T2 dispersion polynomial");

  SuiteOptions o;
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--K", o.K, "Frequency truncation")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", o.samples, "Number of random samples")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  };

  std::string space;
  int max_order = 2;
  int exact_order = -1;
  int parity = 0;
  bool resonant = false;
  bool free_root = false;
  auto* en = app.add_subcommand("enumerate", "List a tree space");
  en->add_option("space", space, "T0 or That")->required();
  en->add_option("--max-order", max_order, "Largest order")->check(CLI::NonNegativeNumber);
  en->add_option("--order", exact_order, "Single order")->check(CLI::NonNegativeNumber);
  en->add_option("--parity", parity, "Root parity")->check(CLI::Range(0, 1));
  en->add_flag("--resonant", resonant, "Resonant entries");
  en->add_flag("--free-root", free_root, "Keep the root frequency free");

  std::string tree_text_arg;
  std::string mode = "fourier";
  std::string variant = "coproduct";
  auto* ar = app.add_subcommand("arborify", "Words of a tree or forest");
  ar->add_option("tree", tree_text_arg, "Canonical encoding")->required();
  ar->add_option("--mode", mode)->check(CLI::IsMember({"fourier", "generic"}));
  ar->add_option("--variant", variant)->check(CLI::IsMember({"coproduct", "adjoint"}));

  bool single_cut = false;
  auto* co = app.add_subcommand("coproduct", "Coproduct of a tree or forest");
  co->add_option("tree", tree_text_arg, "Canonical encoding")->required();
  co->add_option("--mode", mode)->check(CLI::IsMember({"fourier", "generic"}));
  co->add_flag("--single-cut", single_cut, "Adjoint of grafting instead of the full coproduct");

  int n = 1;
  std::string kind = "N0";
  auto* nf = app.add_subcommand("normal-form", "Normal-form summands");
  nf->add_option("--n", n, "Order")->check(CLI::PositiveNumber);
  nf->add_option("--kind", kind, "N0, R, N, N2 or N1");

  auto* so = app.add_subcommand("series-order", "Convergence rate of the tree series");
  so->add_option("--r", o.r, "Series order")->check(CLI::Range(1, 2));
  so->add_option("--t", o.series_times, "Times, largest first");
  add_numeric(so);

  std::vector<int64_t> cutoffs;
  std::vector<double> times;
  auto* th = app.add_subcommand("check-theorem", "Residual of the normal-form recursion");
  th->add_option("--n", n, "Order")->check(CLI::Range(1, 2));
  th->add_option("--N", cutoffs, "Cutoffs");
  th->add_option("--t", times, "Times");
  add_numeric(th);

  std::string identity;
  int jobs = 1;
  auto* ch = app.add_subcommand("check", "Run an identity suite");
  ch->add_option("identity", identity, "Suite name or 'all'")->required();
  ch->add_option("--pairs", o.pairs)->check(CLI::NonNegativeNumber);
  ch->add_option("--maxlen", o.maxlen)->check(CLI::NonNegativeNumber);
  ch->add_option("--max-order", o.max_order)->check(CLI::NonNegativeNumber);
  ch->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);
  ch->add_option("--r", o.r)->check(CLI::Range(1, 2));
  ch->add_option("--N", cutoffs, "Cutoffs");
  ch->add_option("--t", times, "Times");
  ch->add_option("--jobs", jobs, "Parallel suites")->check(CLI::PositiveNumber);
  add_numeric(ch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!cutoffs.empty()) o.cutoffs = cutoffs;
  if (!times.empty()) o.times = times;
  cfg.jobs = jobs;
  cfg.seed = o.seed;

  try {
    if (en->parsed()) return cmd_enumerate(cfg, space, max_order, exact_order, parity, resonant, free_root);
    if (ar->parsed()) return cmd_arborify(cfg, tree_text_arg, mode, variant);
    if (co->parsed()) return cmd_coproduct(cfg, tree_text_arg, mode, single_cut);
    if (nf->parsed()) return cmd_normal_form(cfg, n, kind);
    if (so->parsed()) return cmd_series_order(cfg, o);
    if (th->parsed()) return cmd_check_theorem(cfg, n, o);
    if (ch->parsed()) return cmd_check(cfg, identity, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
