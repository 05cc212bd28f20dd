#include "arbor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace arbor {

std::string symbol_name(Symbol s) {
  if (s == 0) return "k";
  if (s < kEllBase) return "k" + std::to_string(s);
  if (s < kAtomBase) return "l" + std::to_string(s - kEllBase);
  return "p" + std::to_string(s - kAtomBase);
}

std::string symbol_latex(Symbol s) {
  if (s == 0) return "k";
  if (s < kEllBase) return "k_{" + std::to_string(s) + "}";
  if (s < kAtomBase) return "\\ell_{" + std::to_string(s - kEllBase) + "}";
  return "\\phi_{" + std::to_string(s - kAtomBase) + "}";
}

std::optional<Symbol> parse_symbol(const std::string& name) {
  if (name.empty()) return std::nullopt;
  char head = name[0];
  std::string tail = name.substr(1);
  if (!std::all_of(tail.begin(), tail.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
  if (head == 'k') {
    if (tail.empty()) return Symbol(0);
    unsigned long v = std::stoul(tail);
    if (v == 0 || v >= kEllBase) return std::nullopt;
    return Symbol(v);
  }
  if (tail.empty()) return std::nullopt;
  unsigned long v = std::stoul(tail);
  if (head == 'l' && v < kAtomBase - kEllBase) return Symbol(kEllBase + v);
  if (head == 'p') return Symbol(kAtomBase + v);
  return std::nullopt;
}

int64_t FreqAssignment::at(Symbol s) const {
  auto it = values_.find(s);
  if (it == values_.end()) throw std::out_of_range("unassigned frequency symbol " + symbol_name(s));
  return it->second;
}

// ---------------------------------------------------------------- FreqVector

FreqVector FreqVector::symbol(Symbol s, int64_t c) {
  FreqVector f;
  f.add_term(s, c);
  return f;
}

void FreqVector::add_term(Symbol s, int64_t c) {
  if (c == 0) return;
  auto& slot = coeffs_[s];
  slot += c;
  if (slot == 0) coeffs_.erase(s);
}

int64_t FreqVector::coeff(Symbol s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? 0 : it->second;
}

FreqVector FreqVector::operator-() const { return scaled(-1); }

FreqVector operator+(const FreqVector& a, const FreqVector& b) {
  FreqVector r = a;
  for (const auto& [s, c] : b.coeffs_) r.add_term(s, c);
  return r;
}

FreqVector FreqVector::scaled(int64_t c) const {
  FreqVector r;
  if (c == 0) return r;
  for (const auto& [s, v] : coeffs_) r.coeffs_[s] = v * c;
  return r;
}

FreqVector FreqVector::substitute(Symbol s, const FreqVector& f) const {
  int64_t c = coeff(s);
  if (c == 0) return *this;
  FreqVector r = *this;
  r.coeffs_.erase(s);
  return r + f.scaled(c);
}

int64_t FreqVector::eval(const FreqAssignment& a) const {
  int64_t v = 0;
  for (const auto& [s, c] : coeffs_) v += c * a.at(s);
  return v;
}

FreqPolynomial FreqVector::to_poly() const {
  FreqPolynomial p;
  for (const auto& [s, c] : coeffs_) p += FreqPolynomial::symbol(s).scaled(Scalar(c));
  return p;
}

FreqPolynomial FreqVector::square() const {
  auto p = to_poly();
  return p * p;
}

namespace {

std::string linear_text(const std::map<Symbol, int64_t>& coeffs, bool latex) {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : coeffs) {
    int64_t mag = c < 0 ? -c : c;
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (mag != 1) out += std::to_string(mag);
    out += latex ? symbol_latex(s) : symbol_name(s);
    first = false;
  }
  return out;
}

}  // namespace

std::string FreqVector::str() const { return linear_text(coeffs_, false); }
std::string FreqVector::latex() const { return linear_text(coeffs_, true); }

FreqVector FreqVector::parse(const std::string& text) {
  FreqVector f;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad frequency '" + text + "' at " + std::to_string(i) + ": " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip();
    if (i != text.size()) fail("trailing input after 0");
    return f;
  }
  bool any = false;
  while (true) {
    skip();
    if (i == text.size()) break;
    int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      fail("expected + or -");
    }
    int64_t mag = 1;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) mag = std::stoll(text.substr(start, i - start));
    start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    auto sym = parse_symbol(text.substr(start, i - start));
    if (!sym) fail("unknown symbol");
    f.add_term(*sym, sign * mag);
    any = true;
  }
  if (!any) fail("empty frequency");
  return f;
}

// ---------------------------------------------------------------- Monomials

uint32_t monomial_degree(const Monomial& m) {
  uint32_t d = 0;
  for (const auto& [s, e] : m) d += e;
  return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  uint32_t da = monomial_degree(a);
  uint32_t db = monomial_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    Symbol s;
    if (i == a.size()) {
      s = b[j].first;
    } else if (j == b.size()) {
      s = a[i].first;
    } else {
      s = std::min(a[i].first, b[j].first);
    }
    uint32_t ea = (i < a.size() && a[i].first == s) ? a[i].second : 0;
    uint32_t eb = (j < b.size() && b[j].first == s) ? b[j].second : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
    if (i < a.size() && a[i].first == s) ++i;
    if (j < b.size() && b[j].first == s) ++j;
  }
  return 0;
}

// ---------------------------------------------------------------- FreqPolynomial

FreqPolynomial::FreqPolynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

FreqPolynomial FreqPolynomial::symbol(Symbol s) { return monomial({{s, 1}}, Scalar(1)); }

FreqPolynomial FreqPolynomial::monomial(const Monomial& m, const Scalar& c) {
  FreqPolynomial p;
  p.add_term(m, c);
  return p;
}

void FreqPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool FreqPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar FreqPolynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

uint32_t FreqPolynomial::degree() const { return terms_.empty() ? 0 : monomial_degree(terms_.rbegin()->first); }

FreqPolynomial FreqPolynomial::operator-() const { return scaled(Scalar(-1)); }

FreqPolynomial& FreqPolynomial::operator+=(const FreqPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FreqPolynomial operator+(const FreqPolynomial& a, const FreqPolynomial& b) {
  FreqPolynomial r = a;
  r += b;
  return r;
}

FreqPolynomial operator-(const FreqPolynomial& a, const FreqPolynomial& b) {
  FreqPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

FreqPolynomial operator*(const FreqPolynomial& a, const FreqPolynomial& b) {
  FreqPolynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  }
  return r;
}

FreqPolynomial FreqPolynomial::scaled(const Scalar& c) const {
  FreqPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
  return r;
}

Scalar FreqPolynomial::eval(const FreqAssignment& a) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Rational value(1);
    for (const auto& [s, e] : m) {
      Rational x(a.at(s));
      for (uint32_t k = 0; k < e; ++k) value *= x;
    }
    total += c * Scalar(value);
  }
  return total;
}

std::vector<Symbol> FreqPolynomial::symbols() const {
  std::vector<Symbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string poly_text(const FreqPolynomial::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar coef = c;
    bool negative = c.is_real() && c.re() < Rational(0);
    if (negative) coef = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [s, e] : m) {
      if (!mono.empty()) mono += latex ? " " : "·";
      mono += latex ? symbol_latex(s) : symbol_name(s);
      if (e > 1) mono += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += coef.str();
    } else if (coef == Scalar(1)) {
      out += mono;
    } else {
      out += coef.str() + (latex ? " " : "·") + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string FreqPolynomial::str() const { return poly_text(terms_, false); }
std::string FreqPolynomial::latex() const { return poly_text(terms_, true); }

int poly_cmp(const FreqPolynomial& a, const FreqPolynomial& b) {
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (int c = grlex_cmp(ia->first, ib->first); c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c < 0 ? -1 : 1;
  }
  if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
  return ia == a.terms().rend() ? -1 : 1;
}

FreqPolynomial poly_square_of_linear(const FreqVector& f, const Scalar& sign) { return f.square().scaled(sign); }

Scalar poly_eval(const FreqPolynomial& p, const FreqAssignment& a) { return p.eval(a); }

// ---------------------------------------------------------------- RationalFunction

namespace {

FreqPolynomial product(const std::vector<FreqPolynomial>& fs) {
  FreqPolynomial r(1);
  for (const auto& f : fs) r = r * f;
  return r;
}

// Multiset difference a \ b for sorted factor lists (b must be contained in a).
std::vector<FreqPolynomial> minus(const std::vector<FreqPolynomial>& a, const std::vector<FreqPolynomial>& b) {
  std::vector<FreqPolynomial> out;
  size_t j = 0;
  for (const auto& f : a) {
    if (j < b.size() && poly_cmp(f, b[j]) == 0) {
      ++j;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<FreqPolynomial> lcm(const std::vector<FreqPolynomial>& a, const std::vector<FreqPolynomial>& b) {
  std::vector<FreqPolynomial> out;
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      int c = poly_cmp(a[i], b[j]);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        out.push_back(a[i]);
        ++i;
        ++j;
      }
    }
  }
  return out;
}

std::vector<FreqPolynomial> merge(const std::vector<FreqPolynomial>& a, const std::vector<FreqPolynomial>& b) {
  std::vector<FreqPolynomial> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), PolyLess{});
  return out;
}

}  // namespace

RationalFunction::RationalFunction(const FreqPolynomial& num) : num_(num) {}

RationalFunction::RationalFunction(const FreqPolynomial& num, const FreqPolynomial& den) : num_(num) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) return;
  Scalar lc = den.leading().second;
  num_ = num_.scaled(Scalar(1) / lc);
  if (!den.is_constant()) factors_.push_back(den.scaled(Scalar(1) / lc));
}

FreqPolynomial RationalFunction::den() const { return product(factors_); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalFunction RationalFunction::divided_by(const FreqPolynomial& p) const { return *this * RationalFunction(FreqPolynomial(1), p); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction r;
  r.factors_ = lcm(a.factors_, b.factors_);
  r.num_ = a.num_ * product(minus(r.factors_, a.factors_)) + b.num_ * product(minus(r.factors_, b.factors_));
  if (r.num_.is_zero()) r.factors_.clear();
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r;
  r.num_ = a.num_ * b.num_;
  if (!r.num_.is_zero()) r.factors_ = merge(a.factors_, b.factors_);
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto l = lcm(a.factors_, b.factors_);
  return a.num_ * product(minus(l, a.factors_)) == b.num_ * product(minus(l, b.factors_));
}

Scalar RationalFunction::eval(const FreqAssignment& a) const {
  Scalar value = num_.eval(a);
  for (const auto& f : factors_) {
    Scalar d = f.eval(a);
    if (d.is_zero()) throw std::domain_error("division by zero: phase " + f.str() + " vanishes");
    value = value / d;
  }
  return value;
}

std::string RationalFunction::str() const {
  if (factors_.empty()) return num_.str();
  std::string den;
  for (const auto& f : factors_) {
    if (!den.empty()) den += "·";
    den += "(" + f.str() + ")";
  }
  return "(" + num_.str() + ")/(" + den + ")";
}

std::string RationalFunction::latex() const {
  if (factors_.empty()) return num_.latex();
  std::string den;
  for (const auto& f : factors_) den += "\\left(" + f.latex() + "\\right)";
  return "\\frac{" + num_.latex() + "}{" + den + "}";
}

bool ratfun_is_zero(const RationalFunction& r) { return r.num().is_zero(); }

}  // namespace arbor
