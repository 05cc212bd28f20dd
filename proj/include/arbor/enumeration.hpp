#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

struct TreeSpaceSpec {
  int order = 1;
  bool up_to = false;  // all orders 0..order (T0 spaces only)
  int parity = 0;
  bool constrain_root = true;  // root-node frequency is the symbol k
  bool resonant = false;
};

// A tree of a space together with the pointwise side conditions that come
// with a resonant identification.
struct SpaceEntry {
  DecoratedTree tree;
  // Pairs of frequencies that must differ at every evaluated assignment.
  std::vector<std::pair<FreqVector, FreqVector>> distinct;
  // 0 for non-resonant trees; 1 identifies the odd leaf with the first
  // same-parity leaf, 2 with the second one (excluding the first coincidence).
  int pattern = 0;
  std::optional<NodePath> resonant_node;
};

// Shapes carry zero frequencies everywhere.
std::vector<DecoratedTree> t0_shapes(int parity, int order);
std::vector<DecoratedTree> that_shapes(int parity, int order);

// Fresh leaf symbols first, first+1, ... in depth-first order, taking the
// child of opposite parity before the same-parity children.
DecoratedTree instantiate(const DecoratedTree& shape, Symbol first = 1);
// Solve the root-node frequency equal to the symbol k for the last symbol
// that enters it with coefficient +-1.
DecoratedTree constrain_root(const DecoratedTree& t, std::vector<std::pair<FreqVector, FreqVector>>* side = nullptr);

std::vector<DecoratedTree> gen_T0(const TreeSpaceSpec& spec);
std::vector<DecoratedTree> gen_That(const TreeSpaceSpec& spec);
std::vector<SpaceEntry> gen_That_res(const TreeSpaceSpec& spec);
std::vector<SpaceEntry> that_entries(const TreeSpaceSpec& spec);  // resonant or not per spec

// All rooted trees with at most max_nodes nodes whose edges carry labels from
// the given decorations; frequencies are zero.
std::vector<DecoratedTree> generic_trees(int max_nodes, const std::vector<EdgeDecoration>& labels);

// Cherry templates over the letter symbols l1, l2, l3.
std::vector<DecoratedTree> alphabet_letters(const std::vector<int>& parities);

// T2 nodes whose local phase is identically zero.
std::vector<NodePath> resonant_nodes(const DecoratedTree& t);

}  // namespace arbor
