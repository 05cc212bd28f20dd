#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "arbor/poly.hpp"

namespace arbor {

enum class EdgeKind : uint8_t { T1 = 1, T2 = 2 };

struct EdgeDecoration {
  EdgeKind kind = EdgeKind::T1;
  int parity = 0;

  std::string str() const;
  std::string latex() const;
  friend auto operator<=>(const EdgeDecoration&, const EdgeDecoration&) = default;
};

inline constexpr EdgeDecoration kPlain{EdgeKind::T1, 0};
inline constexpr EdgeDecoration kConj{EdgeKind::T1, 1};
inline constexpr EdgeDecoration kBlue{EdgeKind::T2, 0};
inline constexpr EdgeDecoration kBlueConj{EdgeKind::T2, 1};

// P_t(lambda) = sign_t * lambda^2.
struct Dispersion {
  int t1_sign = -1;
  int t2_sign = 1;
};

// P_{(t,p)}(f) = (-1)^p P_t((-1)^p f).
FreqPolynomial edge_phase(const EdgeDecoration& e, const FreqVector& f, const Dispersion& d = {});
int64_t edge_phase_value(const EdgeDecoration& e, int64_t f, const Dispersion& d = {});

using NodePath = std::vector<size_t>;

// Planted decorated tree. The value carries the decoration of the edge leaving
// the implicit root and the frequency of the node at its top; children hang
// below that node. Children are kept sorted by canonical encoding, so two
// trees are equal iff their encodings are equal.
class DecoratedTree {
 public:
  // Throws std::invalid_argument when the frequency identity fails at the
  // new node.
  DecoratedTree(EdgeDecoration deco, FreqVector freq, std::vector<DecoratedTree> children = {});

  static DecoratedTree parse(const std::string& text);

  const EdgeDecoration& deco() const { return node_->deco; }
  const FreqVector& freq() const { return node_->freq; }
  const std::vector<DecoratedTree>& children() const { return node_->children; }
  bool is_leaf() const { return node_->children.empty(); }

  const std::string& encoding() const { return node_->enc; }
  // Encoding with frequencies erased.
  const std::string& shape() const { return node_->shape; }
  std::string latex() const;

  const DecoratedTree& at(const NodePath& path) const;
  DecoratedTree replace_at(const NodePath& path, const DecoratedTree& sub) const;
  DecoratedTree map_freq(const std::function<FreqVector(const FreqVector&)>& fn) const;
  DecoratedTree substitute(Symbol s, const FreqVector& f) const;
  DecoratedTree with_children(std::vector<DecoratedTree> children) const;
  DecoratedTree erase_freq() const;

  friend bool operator==(const DecoratedTree& a, const DecoratedTree& b) { return a.encoding() == b.encoding(); }
  friend bool operator<(const DecoratedTree& a, const DecoratedTree& b) { return a.encoding() < b.encoding(); }

 private:
  struct Node {
    EdgeDecoration deco;
    FreqVector freq;
    std::vector<DecoratedTree> children;
    std::string enc;
    std::string shape;
  };
  std::shared_ptr<const Node> node_;
};

// Commutative multiset of trees; the empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(DecoratedTree t) : trees_{std::move(t)} {}
  explicit Forest(std::vector<DecoratedTree> trees);

  static Forest parse(const std::string& text);

  const std::vector<DecoratedTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  size_t size() const { return trees_.size(); }
  const DecoratedTree& single() const;

  std::string encoding() const;
  std::string latex() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) = default;
  friend bool operator<(const Forest& a, const Forest& b) { return a.trees_ < b.trees_; }

 private:
  std::vector<DecoratedTree> trees_;
};

inline Forest forest_product(const Forest& a, const Forest& b) { return a * b; }

DecoratedTree canonicalize(const DecoratedTree& t);

// Shape-only symmetry factor; with_freq also distinguishes frequencies.
int64_t symmetry_factor(const Forest& f, bool with_freq = false);
int64_t symmetry_factor(const DecoratedTree& t, bool with_freq = false);

// Number of T2 edges.
int order(const DecoratedTree& t);
int order(const Forest& f);
int count_edges(const DecoratedTree& t, EdgeDecoration e);

FreqPolynomial freq_F(const DecoratedTree& t, const Dispersion& d = {});
FreqPolynomial freq_F(const Forest& f, const Dispersion& d = {});

// Phase of the incoming edge at the top node plus the phases of its children.
FreqPolynomial local_phase(const DecoratedTree& node, const Dispersion& d = {});

// Local phase is checked at nodes entered by a T2 edge; a T1 edge above a
// single T2 edge has a local phase that vanishes by construction.
bool is_non_resonant(const DecoratedTree& t, const Dispersion& d = {});

void for_each_node(const DecoratedTree& t, const std::function<void(const NodePath&, const DecoratedTree&)>& fn);
std::vector<NodePath> leaf_paths(const DecoratedTree& t);
std::vector<Symbol> tree_symbols(const DecoratedTree& t);

enum class RenderFormat { Ascii, Latex };
std::string render(const DecoratedTree& t, RenderFormat fmt = RenderFormat::Ascii);
std::string render(const Forest& f, RenderFormat fmt = RenderFormat::Ascii);

}  // namespace arbor
