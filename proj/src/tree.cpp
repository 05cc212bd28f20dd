#include "arbor/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace arbor {

std::string EdgeDecoration::str() const {
  return std::string("(") + (kind == EdgeKind::T1 ? "t1" : "t2") + "," + std::to_string(parity) + ")";
}

std::string EdgeDecoration::latex() const {
  return std::string("(\\mathfrak{t}_") + (kind == EdgeKind::T1 ? "1" : "2") + "," + std::to_string(parity) + ")";
}

FreqPolynomial edge_phase(const EdgeDecoration& e, const FreqVector& f, const Dispersion& d) {
  int sign = e.kind == EdgeKind::T1 ? d.t1_sign : d.t2_sign;
  if (e.parity == 1) sign = -sign;
  return poly_square_of_linear(f, Scalar(sign));
}

int64_t edge_phase_value(const EdgeDecoration& e, int64_t f, const Dispersion& d) {
  int64_t sign = e.kind == EdgeKind::T1 ? d.t1_sign : d.t2_sign;
  if (e.parity == 1) sign = -sign;
  return sign * f * f;
}

// ---------------------------------------------------------------- DecoratedTree

DecoratedTree::DecoratedTree(EdgeDecoration deco, FreqVector freq, std::vector<DecoratedTree> children) {
  if (deco.parity != 0 && deco.parity != 1) throw std::invalid_argument("edge parity must be 0 or 1");
  std::sort(children.begin(), children.end());
  auto node = std::make_shared<Node>();
  node->deco = deco;
  node->freq = std::move(freq);
  node->children = std::move(children);

  std::string head = "I[" + deco.str() + "](";
  node->enc = head + node->freq.str();
  node->shape = head;
  std::vector<std::string> shapes;
  for (const auto& c : node->children) shapes.push_back(c.shape());
  std::sort(shapes.begin(), shapes.end());
  if (!node->children.empty()) {
    node->enc += "; ";
    for (size_t i = 0; i < node->children.size(); ++i) {
      if (i > 0) {
        node->enc += ", ";
        node->shape += ", ";
      }
      node->enc += node->children[i].encoding();
      node->shape += shapes[i];
    }
  }
  node->enc += ")";
  node->shape += ")";

  if (!node->children.empty()) {
    FreqVector sum;
    for (const auto& c : node->children) sum += c.deco().parity == 1 ? -c.freq() : c.freq();
    FreqVector lhs = deco.parity == 1 ? -node->freq : node->freq;
    if (!(lhs == sum)) throw std::invalid_argument("frequency identity violated at node " + node->enc);
  }
  node_ = std::move(node);
}

std::string DecoratedTree::latex() const { return render(*this, RenderFormat::Latex); }

const DecoratedTree& DecoratedTree::at(const NodePath& path) const {
  const DecoratedTree* cur = this;
  for (size_t idx : path) {
    if (idx >= cur->children().size()) throw std::out_of_range("node path out of range");
    cur = &cur->children()[idx];
  }
  return *cur;
}

DecoratedTree DecoratedTree::replace_at(const NodePath& path, const DecoratedTree& sub) const {
  if (path.empty()) return sub;
  size_t idx = path.front();
  if (idx >= children().size()) throw std::out_of_range("node path out of range");
  auto kids = children();
  kids[idx] = kids[idx].replace_at(NodePath(path.begin() + 1, path.end()), sub);
  return {deco(), freq(), std::move(kids)};
}

DecoratedTree DecoratedTree::map_freq(const std::function<FreqVector(const FreqVector&)>& fn) const {
  std::vector<DecoratedTree> kids;
  kids.reserve(children().size());
  for (const auto& c : children()) kids.push_back(c.map_freq(fn));
  return {deco(), fn(freq()), std::move(kids)};
}

DecoratedTree DecoratedTree::substitute(Symbol s, const FreqVector& f) const {
  return map_freq([&](const FreqVector& v) { return v.substitute(s, f); });
}

DecoratedTree DecoratedTree::with_children(std::vector<DecoratedTree> children) const {
  return {deco(), freq(), std::move(children)};
}

DecoratedTree DecoratedTree::erase_freq() const {
  return map_freq([](const FreqVector&) { return FreqVector(); });
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(const std::string& tok) {
    skip();
    if (text_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos_ += tok.size();
  }

  bool at_end() {
    skip();
    return pos_ == text_.size();
  }

  DecoratedTree tree() {
    expect("I[(");
    skip();
    EdgeDecoration deco;
    if (text_.compare(pos_, 2, "t1") == 0) {
      deco.kind = EdgeKind::T1;
    } else if (text_.compare(pos_, 2, "t2") == 0) {
      deco.kind = EdgeKind::T2;
    } else {
      fail("expected edge kind t1 or t2");
    }
    pos_ += 2;
    expect(",");
    skip();
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      deco.parity = text_[pos_] - '0';
      ++pos_;
    } else {
      fail("expected parity 0 or 1");
    }
    expect(")](");
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != ')') ++pos_;
    FreqVector freq;
    try {
      freq = FreqVector::parse(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
    std::vector<DecoratedTree> kids;
    if (peek(';')) {
      ++pos_;
      kids.push_back(tree());
      while (peek(',')) {
        ++pos_;
        kids.push_back(tree());
      }
    }
    expect(")");
    size_t end = pos_;
    try {
      return {deco, freq, std::move(kids)};
    } catch (const std::invalid_argument& e) {
      pos_ = end;
      fail(e.what());
    }
  }

  Forest forest() {
    skip();
    if (peek('1')) {
      ++pos_;
      if (!at_end()) fail("trailing input after empty forest");
      return {};
    }
    std::vector<DecoratedTree> trees{tree()};
    while (peek('*')) {
      ++pos_;
      trees.push_back(tree());
    }
    if (!at_end()) fail("trailing input");
    return Forest(std::move(trees));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

DecoratedTree DecoratedTree::parse(const std::string& text) {
  Parser p(text);
  auto t = p.tree();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

// ---------------------------------------------------------------- Forest

Forest::Forest(std::vector<DecoratedTree> trees) : trees_(std::move(trees)) { std::sort(trees_.begin(), trees_.end()); }

Forest Forest::parse(const std::string& text) { return Parser(text).forest(); }

const DecoratedTree& Forest::single() const {
  if (trees_.size() != 1) throw std::logic_error("forest is not a single tree: " + encoding());
  return trees_.front();
}

std::string Forest::encoding() const { return render(*this, RenderFormat::Ascii); }
std::string Forest::latex() const { return render(*this, RenderFormat::Latex); }

Forest operator*(const Forest& a, const Forest& b) {
  Forest r;
  r.trees_.reserve(a.size() + b.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(r.trees_));
  return r;
}

// ---------------------------------------------------------------- structure

DecoratedTree canonicalize(const DecoratedTree& t) {
  std::vector<DecoratedTree> kids;
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  return {t.deco(), t.freq(), std::move(kids)};
}

namespace {

int64_t factorial(int64_t n) {
  int64_t r = 1;
  for (int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

int64_t forest_symmetry(const std::vector<DecoratedTree>& trees, bool with_freq) {
  std::map<std::string, std::pair<int64_t, const DecoratedTree*>> groups;
  for (const auto& t : trees) {
    auto& g = groups[with_freq ? t.encoding() : t.shape()];
    g.first += 1;
    g.second = &t;
  }
  int64_t s = 1;
  for (const auto& [key, g] : groups) {
    int64_t inner = forest_symmetry(g.second->children(), with_freq);
    for (int64_t i = 0; i < g.first; ++i) s *= inner;
    s *= factorial(g.first);
  }
  return s;
}

}  // namespace

int64_t symmetry_factor(const Forest& f, bool with_freq) { return forest_symmetry(f.trees(), with_freq); }

int64_t symmetry_factor(const DecoratedTree& t, bool with_freq) { return forest_symmetry(t.children(), with_freq); }

int count_edges(const DecoratedTree& t, EdgeDecoration e) {
  int n = t.deco() == e ? 1 : 0;
  for (const auto& c : t.children()) n += count_edges(c, e);
  return n;
}

int order(const DecoratedTree& t) {
  int n = t.deco().kind == EdgeKind::T2 ? 1 : 0;
  for (const auto& c : t.children()) n += order(c);
  return n;
}

int order(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees()) n += order(t);
  return n;
}

FreqPolynomial freq_F(const DecoratedTree& t, const Dispersion& d) {
  FreqPolynomial p = edge_phase(t.deco(), t.freq(), d);
  for (const auto& c : t.children()) p += freq_F(c, d);
  return p;
}

FreqPolynomial freq_F(const Forest& f, const Dispersion& d) {
  FreqPolynomial p;
  for (const auto& t : f.trees()) p += freq_F(t, d);
  return p;
}

FreqPolynomial local_phase(const DecoratedTree& node, const Dispersion& d) {
  FreqPolynomial p = edge_phase(node.deco(), node.freq(), d);
  for (const auto& c : node.children()) p += edge_phase(c.deco(), c.freq(), d);
  return p;
}

bool is_non_resonant(const DecoratedTree& t, const Dispersion& d) {
  if (!t.is_leaf() && t.deco().kind == EdgeKind::T2 && local_phase(t, d).is_zero()) return false;
  return std::all_of(t.children().begin(), t.children().end(), [&](const DecoratedTree& c) { return is_non_resonant(c, d); });
}

namespace {

void walk(const DecoratedTree& t, NodePath& path, const std::function<void(const NodePath&, const DecoratedTree&)>& fn) {
  fn(path, t);
  for (size_t i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    walk(t.children()[i], path, fn);
    path.pop_back();
  }
}

}  // namespace

void for_each_node(const DecoratedTree& t, const std::function<void(const NodePath&, const DecoratedTree&)>& fn) {
  NodePath path;
  walk(t, path, fn);
}

std::vector<NodePath> leaf_paths(const DecoratedTree& t) {
  std::vector<NodePath> out;
  for_each_node(t, [&](const NodePath& p, const DecoratedTree& n) {
    if (n.is_leaf()) out.push_back(p);
  });
  return out;
}

std::vector<Symbol> tree_symbols(const DecoratedTree& t) {
  std::vector<Symbol> out;
  for_each_node(t, [&](const NodePath&, const DecoratedTree& n) {
    for (const auto& [s, c] : n.freq().coeffs()) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- rendering

std::string render(const DecoratedTree& t, RenderFormat fmt) {
  if (fmt == RenderFormat::Ascii) return t.encoding();
  std::string out = "\\mathcal{I}_{" + t.deco().latex() + "}\\left(\\lambda_{" + t.freq().latex() + "}";
  for (const auto& c : t.children()) out += " " + render(c, fmt);
  return out + "\\right)";
}

std::string render(const Forest& f, RenderFormat fmt) {
  if (f.empty()) return fmt == RenderFormat::Ascii ? "1" : "\\mathbf{1}";
  std::string out;
  for (const auto& t : f.trees()) {
    if (!out.empty()) out += fmt == RenderFormat::Ascii ? " * " : " \\cdot ";
    out += render(t, fmt);
  }
  return out;
}

}  // namespace arbor
