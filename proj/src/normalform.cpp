#include "arbor/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace arbor {

namespace {

const cplx kI(0.0, 1.0);

cplx v_at(const NLSState& v, int64_t k, int parity) { return v.at(k, parity); }

cplx dv_at(const NLSState& v, const std::vector<cplx>& dv, int64_t k, int parity) {
  if (!v.in_range(k)) return 0.0;
  cplx d = dv[static_cast<size_t>(k + v.K)];
  return parity == 1 ? std::conj(d) : d;
}

std::string factor_str(const VFactor& f, bool latex) {
  if (latex) return std::string(f.parity == 1 ? "\\bar v" : "v") + "_{" + f.freq.latex() + "}";
  return std::string(f.parity == 1 ? "vbar" : "v") + "[" + f.freq.str() + "]";
}

Rational to_rational(const Scalar& s) {
  if (!s.is_real()) throw std::domain_error("phase is not real");
  return s.re();
}

}  // namespace

// ---------------------------------------------------------------- Upsilon

cplx VMonomial::eval(const FreqAssignment& a, const NLSState& v) const {
  cplx r = static_cast<double>(coeff);
  for (const auto& f : factors) r *= v_at(v, f.freq.eval(a), f.parity);
  return r;
}

cplx VMonomial::eval_dt(const FreqAssignment& a, const NLSState& v, const std::vector<cplx>& dv) const {
  std::vector<int64_t> ks;
  ks.reserve(factors.size());
  for (const auto& f : factors) ks.push_back(f.freq.eval(a));
  cplx total = 0.0;
  for (size_t i = 0; i < factors.size(); ++i) {
    cplx term = dv_at(v, dv, ks[i], factors[i].parity);
    for (size_t j = 0; j < factors.size() && term != 0.0; ++j) {
      if (j != i) term *= v_at(v, ks[j], factors[j].parity);
    }
    total += term;
  }
  return static_cast<double>(coeff) * total;
}

std::string VMonomial::str() const {
  std::string out = std::to_string(coeff);
  for (const auto& f : factors) out += "·" + factor_str(f, false);
  return out;
}

std::string VMonomial::latex() const {
  std::string out = coeff == 1 && !factors.empty() ? "" : std::to_string(coeff);
  for (const auto& f : factors) out += (out.empty() ? "" : " ") + factor_str(f, true);
  return out;
}

VMonomial upsilon(const DecoratedTree& t) {
  VMonomial m;
  for_each_node(t, [&](const NodePath&, const DecoratedTree& n) {
    size_t arity = n.children().size();
    if (arity == 0) {
      m.factors.push_back({n.freq(), n.deco().parity});
    } else if (arity == 3) {
      m.coeff *= 2;
    } else if (arity != 1) {
      throw std::invalid_argument("node of arity " + std::to_string(arity) + " in " + t.encoding());
    }
  });
  return m;
}

int conjugation_sign(const DecoratedTree& t) { return count_edges(t, kBlueConj) % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------- characters

std::vector<FreqPolynomial> letter_phases(const Word& w, const Dispersion& d) {
  std::vector<FreqPolynomial> out;
  out.reserve(w.size());
  for (const auto& letter : w) out.push_back(freq_F(letter, d));
  return out;
}

OscillatorySum psi_tilde_phases(const std::vector<FreqPolynomial>& phases) {
  RationalFunction c(1);
  FreqPolynomial prefix;
  for (const auto& p : phases) {
    prefix += p;
    if (prefix.is_zero()) throw std::domain_error("resonant word: prefix sum vanishes after " + p.str());
    c = c.divided_by(prefix);
  }
  return OscillatorySum::exp_phase(prefix, c);
}

OscillatorySum psi_tilde(const Word& w, const Dispersion& d) { return psi_tilde_phases(letter_phases(w, d)); }

OscillatorySum psi_tilde(const WordComb& w, const Dispersion& d) {
  OscillatorySum r;
  for (const auto& [word, c] : w.terms()) r += psi_tilde(word, d).scaled(RationalFunction(c));
  return r;
}

namespace {

std::vector<int64_t> eval_phases(const Word& w, const FreqAssignment& a, const Dispersion& d) {
  std::vector<int64_t> out;
  for (const auto& p : letter_phases(w, d)) {
    Rational r = to_rational(p.eval(a));
    if (!r.is_integer()) throw std::domain_error("non-integer phase");
    out.push_back(r.num());
  }
  return out;
}

// Amplitude and total phase of the cutoff character; nullopt when the
// indicator vanishes.
std::optional<std::pair<Rational, int64_t>> psi_parts(const std::vector<int64_t>& phases, size_t len, int64_t N) {
  Rational c(1);
  int64_t prefix = 0;
  for (size_t i = 0; i < len; ++i) {
    prefix += phases[i];
    if (std::llabs(prefix) <= N) return std::nullopt;
    c = c / Rational(prefix);
  }
  return std::make_pair(c, prefix);
}

}  // namespace

OscillatorySum psi(const Word& w, const FreqAssignment& a, int64_t N, const Dispersion& d) {
  auto phases = eval_phases(w, a, d);
  auto parts = psi_parts(phases, phases.size(), N);
  if (!parts) return {};
  return OscillatorySum::exp_phase(FreqPolynomial(Scalar(parts->second)), RationalFunction(Scalar(parts->first)));
}

cplx psi_value(const std::vector<int64_t>& phases, int64_t N, double t) {
  auto parts = psi_parts(phases, phases.size(), N);
  if (!parts) return 0.0;
  return parts->first.to_double() * std::exp(cplx(0.0, static_cast<double>(parts->second) * t));
}

OscillatorySum psi_hat(const Word& w, const FreqAssignment* a, int64_t N, const Dispersion& d) {
  if (w.empty()) throw std::invalid_argument("psi_hat needs a nonempty word");
  Word rest(w.begin(), w.end() - 1);
  if (!a) {
    auto phases = letter_phases(w, d);
    FreqPolynomial total;
    for (const auto& p : phases) total += p;
    if (total.is_zero()) throw std::domain_error("resonant word: total phase vanishes");
    OscillatorySum inner = psi_tilde_phases(std::vector<FreqPolynomial>(phases.begin(), phases.end() - 1));
    return (OscillatorySum::exp_phase(phases.back()) * inner).scaled(RationalFunction::reciprocal(total));
  }
  auto phases = eval_phases(w, *a, d);
  int64_t total = 0;
  for (auto p : phases) total += p;
  if (total == 0) throw std::domain_error("resonant word: total phase vanishes");
  OscillatorySum inner = psi(rest, *a, N, d);
  OscillatorySum head = OscillatorySum::exp_phase(FreqPolynomial(Scalar(phases.back())));
  return (head * inner).scaled(RationalFunction(Scalar(Rational(1, total))));
}

cplx psi_hat_scaled_value(const std::vector<int64_t>& phases, int64_t N, double t) {
  if (phases.empty()) throw std::invalid_argument("psi_hat needs a nonempty word");
  auto parts = psi_parts(phases, phases.size() - 1, N);
  if (!parts) return 0.0;
  double total = static_cast<double>(parts->second + phases.back());
  return parts->first.to_double() * std::exp(cplx(0.0, total * t));
}

// ---------------------------------------------------------------- kinds

std::string nf_kind_name(NFKind k) {
  switch (k) {
    case NFKind::N0: return "N0";
    case NFKind::R: return "R";
    case NFKind::N: return "N";
    case NFKind::N2: return "N2";
    case NFKind::N1: return "N1";
  }
  return "?";
}

std::optional<NFKind> parse_nf_kind(const std::string& s) {
  for (NFKind k : {NFKind::N0, NFKind::R, NFKind::N, NFKind::N2, NFKind::N1}) {
    if (nf_kind_name(k) == s) return k;
  }
  return std::nullopt;
}

std::string character_name(Character c) {
  switch (c) {
    case Character::One: return "one";
    case Character::Phase: return "phase";
    case Character::Psi: return "psi";
    case Character::IFPsi: return "iF_psi";
    case Character::IPsiHatScaled: return "iF_psi_hat";
  }
  return "?";
}

// ---------------------------------------------------------------- evaluation

namespace {

// Phase of a tree as a list of edges, evaluated in integers.
using EdgeList = std::vector<std::pair<EdgeDecoration, FreqVector>>;

EdgeList tree_edges(const DecoratedTree& t) {
  EdgeList out;
  for_each_node(t, [&](const NodePath&, const DecoratedTree& n) { out.emplace_back(n.deco(), n.freq()); });
  return out;
}

EdgeList local_edges(const DecoratedTree& n) {
  EdgeList out{{n.deco(), n.freq()}};
  for (const auto& c : n.children()) out.emplace_back(c.deco(), c.freq());
  return out;
}

int64_t eval_edges(const EdgeList& e, const FreqAssignment& a) {
  int64_t p = 0;
  for (const auto& [deco, f] : e) p += edge_phase_value(deco, f.eval(a));
  return p;
}

struct CompiledWord {
  std::vector<EdgeList> letters;
  double coeff = 0.0;
};

struct Compiled {
  const Summand* s = nullptr;
  std::vector<Symbol> free;
  std::vector<FreqVector> nodes;
  std::vector<EdgeList> checks;
  std::vector<CompiledWord> words;
  EdgeList tree_phase;
  cplx weight;
};

Compiled compile(const Summand& s, const FreqAssignment& base) {
  Compiled c;
  c.s = &s;
  std::vector<Symbol> syms = tree_symbols(s.tree);
  for (const auto& [a, b] : s.distinct) {
    for (const auto* f : {&a, &b}) {
      for (const auto& [sym, coeff] : f->coeffs()) syms.push_back(sym);
    }
  }
  for (const auto& sym : s.phase.symbols()) syms.push_back(sym);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  for (Symbol sym : syms) {
    if (!base.has(sym)) c.free.push_back(sym);
  }
  for_each_node(s.tree, [&](const NodePath&, const DecoratedTree& n) { c.nodes.push_back(n.freq()); });
  for (const auto& p : s.nonresonant) c.checks.push_back(local_edges(s.tree.at(p)));
  for (const auto& [w, coeff] : s.words.terms()) {
    if (!coeff.is_real()) throw std::domain_error("word coefficients are expected to be real");
    CompiledWord cw;
    cw.coeff = coeff.re().to_double();
    for (const auto& letter : w) cw.letters.push_back(tree_edges(letter));
    c.words.push_back(std::move(cw));
  }
  c.tree_phase = tree_edges(s.tree);
  c.weight = s.weight.to_complex();
  return c;
}

// Character as a sum of amplitude * exp(i omega t).
void character_terms(const Compiled& c, const FreqAssignment& a, int64_t N, std::vector<std::pair<cplx, double>>& out) {
  out.clear();
  const Summand& s = *c.s;
  switch (s.character) {
    case Character::One:
      out.emplace_back(1.0, 0.0);
      return;
    case Character::Phase:
      out.emplace_back(1.0, s.phase.eval(a).to_complex().real());
      return;
    default:
      break;
  }
  std::vector<int64_t> phases;
  for (const auto& w : c.words) {
    phases.clear();
    for (const auto& l : w.letters) phases.push_back(eval_edges(l, a));
    if (s.character == Character::IPsiHatScaled) {
      auto parts = psi_parts(phases, phases.size() - 1, N);
      if (!parts) continue;
      double total = static_cast<double>(parts->second + phases.back());
      out.emplace_back(kI * w.coeff * parts->first.to_double(), total);
      continue;
    }
    auto parts = psi_parts(phases, phases.size(), N);
    if (!parts) continue;
    cplx amp = w.coeff * parts->first.to_double();
    if (s.character == Character::IFPsi) amp *= kI * static_cast<double>(parts->second);
    out.emplace_back(amp, static_cast<double>(parts->second));
  }
}

bool admissible(const Compiled& c, const FreqAssignment& a, int K) {
  for (const auto& f : c.nodes) {
    int64_t x = f.eval(a);
    if (x < -K || x > K) return false;
  }
  for (const auto& e : c.checks) {
    if (eval_edges(e, a) == 0) return false;
  }
  for (const auto& [x, y] : c.s->distinct) {
    if (x.eval(a) == y.eval(a)) return false;
  }
  return true;
}

void for_each_assignment(const std::vector<Symbol>& free, const FreqAssignment& base, int K,
                         const std::function<void(const FreqAssignment&)>& fn) {
  FreqAssignment a = base;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == free.size()) {
      fn(a);
      return;
    }
    for (int64_t x = -K; x <= K; ++x) {
      a.set(free[i], x);
      rec(i + 1);
    }
  };
  rec(0);
}

cplx evaluate_impl(const SummandCollection& coll, const FreqAssignment& base, const EvalContext& ctx, const std::vector<cplx>* dv) {
  if (!ctx.v) throw std::invalid_argument("evaluation needs a state");
  const NLSState& v = *ctx.v;
  cplx total = 0.0;
  std::vector<std::pair<cplx, double>> terms;
  for (const auto& s : coll) {
    Compiled c = compile(s, base);
    cplx acc = 0.0;
    for_each_assignment(c.free, base, v.K, [&](const FreqAssignment& a) {
      if (!admissible(c, a, v.K)) return;
      character_terms(c, a, ctx.N, terms);
      if (terms.empty()) return;
      cplx ch = 0.0;
      cplx dch = 0.0;
      for (const auto& [amp, omega] : terms) {
        cplx e = amp * std::exp(cplx(0.0, omega * ctx.t));
        ch += e;
        dch += kI * omega * e;
      }
      if (dv) {
        acc += s.upsilon.eval_dt(a, v, *dv) * ch + s.upsilon.eval(a, v) * dch;
      } else {
        acc += s.upsilon.eval(a, v) * ch;
      }
    });
    total += c.weight * acc;
  }
  return total;
}

Scalar inverse(int64_t s) { return Scalar(Rational(1, s)); }

std::vector<NodePath> blue_nodes(const DecoratedTree& t, const std::optional<NodePath>& skip) {
  std::vector<NodePath> out;
  for_each_node(t, [&](const NodePath& p, const DecoratedTree& n) {
    if (n.deco().kind == EdgeKind::T2 && !n.is_leaf() && (!skip || p != *skip)) out.push_back(p);
  });
  return out;
}

}  // namespace

cplx evaluate(const SummandCollection& c, const FreqAssignment& base, const EvalContext& ctx) {
  return evaluate_impl(c, base, ctx, nullptr);
}

cplx evaluate_dt(const SummandCollection& c, const FreqAssignment& base, const EvalContext& ctx, const std::vector<cplx>& dv) {
  return evaluate_impl(c, base, ctx, &dv);
}

// ---------------------------------------------------------------- terms

SummandCollection normal_form_terms(int n, NFKind kind) {
  if (n < 1) throw std::invalid_argument("normal-form order must be at least 1");
  if (kind == NFKind::N1) {
    auto out = normal_form_terms(n, NFKind::N);
    for (auto& s : out) s.kind = NFKind::N1;
    for (auto s : normal_form_terms(n, NFKind::N2)) {
      s.kind = NFKind::N1;
      s.weight = -s.weight;
      out.push_back(std::move(s));
    }
    return out;
  }
  TreeSpaceSpec spec;
  spec.order = n;
  spec.resonant = kind == NFKind::R;
  SummandCollection out;
  for (auto& e : that_entries(spec)) {
    Summand s;
    s.kind = kind;
    s.tree = e.tree;
    s.upsilon = upsilon(e.tree);
    s.distinct = e.distinct;
    s.nonresonant = blue_nodes(e.tree, e.resonant_node);
    Scalar inv_s = inverse(symmetry_factor(e.tree));
    Scalar eps(conjugation_sign(e.tree));
    if (n == 1 && (kind == NFKind::N || kind == NFKind::R)) {
      s.weight = Scalar(0) - Scalar::i() * inv_s;
      s.character = kind == NFKind::N ? Character::Phase : Character::One;
      if (kind == NFKind::N) s.phase = freq_F(e.tree);
      out.push_back(std::move(s));
      continue;
    }
    s.weight = eps * inv_s;
    WordComb words = arborify(e.tree, Mode::Fourier);
    switch (kind) {
      case NFKind::N0: s.character = Character::Psi; break;
      case NFKind::N2: s.character = Character::IFPsi; break;
      default: s.character = Character::IPsiHatScaled; break;
    }
    if (kind == NFKind::R) {
      const DecoratedTree& res = e.tree.at(*e.resonant_node);
      words = words.filter([&](const Word& w) { return !w.empty() && w.back() == res; });
    }
    s.words = words;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<SpaceEntry> order_one_entries(int parity) {
  TreeSpaceSpec spec;
  spec.order = 1;
  spec.parity = parity;
  auto out = that_entries(spec);
  spec.resonant = true;
  for (auto& e : that_entries(spec)) out.push_back(std::move(e));
  return out;
}

FreqVector shift_symbols(const FreqVector& f, Symbol offset, const FreqVector& root) {
  FreqVector r;
  for (const auto& [s, c] : f.coeffs()) r += s == 0 ? root.scaled(c) : FreqVector::symbol(s + offset, c);
  return r;
}

}  // namespace

SummandCollection dt_upsilon_expansion(const DecoratedTree& t) {
  SummandCollection out;
  auto syms = tree_symbols(t);
  Symbol offset = syms.empty() ? 0 : syms.back();
  for (const auto& path : leaf_paths(t)) {
    const DecoratedTree& leaf = t.at(path);
    if (leaf.deco().kind != EdgeKind::T1) continue;
    int p = leaf.deco().parity;
    for (const auto& e : order_one_entries(p)) {
      auto rename = [&](const FreqVector& f) { return shift_symbols(f, offset, leaf.freq()); };
      DecoratedTree cherry = e.tree.map_freq(rename);
      DecoratedTree grafted = t.replace_at(path, DecoratedTree(leaf.deco(), leaf.freq(), {cherry}));
      Summand s;
      s.kind = e.resonant_node ? NFKind::R : NFKind::N;
      s.tree = grafted;
      s.upsilon = upsilon(grafted);
      s.weight = Scalar(0) - Scalar::i() * Scalar(p == 1 ? -1 : 1) * inverse(symmetry_factor(e.tree));
      for (const auto& [a, b] : e.distinct) s.distinct.emplace_back(rename(a), rename(b));
      if (e.resonant_node) {
        s.character = Character::One;
      } else {
        s.character = Character::Phase;
        s.phase = freq_F(cherry);
        for_each_node(grafted, [&](const NodePath& q, const DecoratedTree& n) {
          if (s.nonresonant.empty() && n == cherry) s.nonresonant.push_back(q);
        });
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------- series

std::vector<cplx> tree_series_U(int r, int64_t k, const NLSState& v, const std::vector<double>& ts) {
  if (!v.in_range(k)) throw std::invalid_argument("root frequency outside the truncation");
  std::vector<cplx> out(ts.size());
  TreeSpaceSpec spec;
  spec.order = r;
  spec.up_to = true;
  FreqAssignment base{{0, k}};
  for (const auto& t : gen_T0(spec)) {
    VMonomial ups = upsilon(t);
    double inv_s = 1.0 / static_cast<double>(symmetry_factor(t));
    std::vector<FreqVector> nodes;
    for_each_node(t, [&](const NodePath&, const DecoratedTree& n) { nodes.push_back(n.freq()); });
    std::vector<Symbol> free;
    for (Symbol s : tree_symbols(t)) {
      if (s != 0) free.push_back(s);
    }
    for_each_assignment(free, base, v.K, [&](const FreqAssignment& a) {
      for (const auto& f : nodes) {
        int64_t x = f.eval(a);
        if (x < -v.K || x > v.K) return;
      }
      cplx u = ups.eval(a, v) * inv_s;
      if (u == 0.0) return;
      PiOptions opt;
      opt.at = &a;
      OscillatorySum pi = pi_map(t, opt);
      for (size_t i = 0; i < ts.size(); ++i) out[i] += u * pi.eval(a, ts[i]);
    });
  }
  return out;
}

cplx tree_series_U(int r, int64_t k, const NLSState& v, double t) { return tree_series_U(r, k, v, std::vector<double>{t}).front(); }

// ---------------------------------------------------------------- theorem

TheoremTerms theorem_check(int n, int64_t k, const NLSState& v, int64_t N) {
  FreqAssignment base{{0, k}};
  EvalContext ctx{&v, N, v.t};
  TheoremTerms r;
  r.n2 = evaluate(normal_form_terms(n, NFKind::N2), base, ctx);
  r.dn0 = evaluate_dt(normal_form_terms(n, NFKind::N0), base, ctx, nls_rhs(v));
  r.n = evaluate(normal_form_terms(n + 1, NFKind::N), base, ctx);
  r.r = evaluate(normal_form_terms(n + 1, NFKind::R), base, ctx);
  return r;
}

}  // namespace arbor
