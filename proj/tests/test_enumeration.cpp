#include <gtest/gtest.h>

#include <set>

#include "arbor/enumeration.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::tree;

namespace {

std::set<std::string> shapes(const std::vector<DecoratedTree>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.shape());
  return out;
}

std::vector<DecoratedTree> t0_up_to(int r, int parity = 0) {
  TreeSpaceSpec spec;
  spec.order = r;
  spec.up_to = true;
  spec.parity = parity;
  return gen_T0(spec);
}

std::vector<DecoratedTree> that(int m, int parity = 0) {
  TreeSpaceSpec spec;
  spec.order = m;
  spec.parity = parity;
  return gen_That(spec);
}

std::vector<SpaceEntry> that_res(int m, int parity = 0) {
  TreeSpaceSpec spec;
  spec.order = m;
  spec.parity = parity;
  spec.resonant = true;
  return gen_That_res(spec);
}

// Shapes of exact order m: a leaf at order 0, otherwise a blue node with an
// unordered pair of same-parity shapes and one opposite-parity shape.
std::vector<int64_t> shape_counts(int max_m) {
  std::vector<int64_t> a(static_cast<size_t>(max_m + 1), 0);
  a[0] = 1;
  for (int m = 1; m <= max_m; ++m) {
    for (int s = 0; s <= m - 1; ++s) {
      int64_t pairs = 0;
      for (int i = 0; i <= s; ++i) pairs += a[static_cast<size_t>(i)] * a[static_cast<size_t>(s - i)];
      if (s % 2 == 0) pairs += a[static_cast<size_t>(s / 2)];
      a[static_cast<size_t>(m)] += pairs / 2 * a[static_cast<size_t>(m - 1 - s)];
    }
  }
  return a;
}

}  // namespace

TEST(GenT0, PaperSpaces) {
  EXPECT_EQ(t0_up_to(0).size(), 1u);
  EXPECT_EQ(t0_up_to(1).size(), 2u);
  auto r2 = t0_up_to(2);
  EXPECT_EQ(r2.size(), 4u);
  std::set<std::string> expected;
  for (const auto& s : {fixtures::kT0, fixtures::kT1, fixtures::kT2, fixtures::kT3}) expected.insert(tree(s).shape());
  EXPECT_EQ(shapes(r2), expected);
}

TEST(GenT0, RootFrequencyIsConstrained) {
  for (const auto& t : t0_up_to(3)) EXPECT_EQ(t.freq(), FreqVector::symbol(0)) << t.encoding();
}

TEST(GenT0, CountsMatchRecurrence) {
  auto counts = shape_counts(4);
  for (int m = 0; m <= 4; ++m) {
    TreeSpaceSpec spec;
    spec.order = m;
    for (int parity : {0, 1}) {
      spec.parity = parity;
      EXPECT_EQ(static_cast<int64_t>(gen_T0(spec).size()), counts[static_cast<size_t>(m)]) << m;
    }
  }
}

TEST(GenT0, LeafCoefficientsAreUnit) {
  for (const auto& t : t0_up_to(3)) {
    for (const auto& p : leaf_paths(t)) {
      const auto& f = t.at(p).freq();
      for (Symbol s : tree_symbols(t)) EXPECT_LE(std::abs(f.coeff(s)), 1);
    }
  }
}

TEST(GenThat, Examples) {
  auto m1 = that(1);
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1[0].shape(), tree(fixtures::kCherry).shape());
  auto m1c = that(1, 1);
  ASSERT_EQ(m1c.size(), 1u);
  EXPECT_EQ(m1c[0].deco(), kBlueConj);
  EXPECT_EQ(count_edges(m1c[0], kConj), 2);
  EXPECT_EQ(shapes(that(2)).size(), 2u);
}

TEST(GenThat, NonResonantInvariant) {
  for (int m = 1; m <= 3; ++m) {
    for (int parity : {0, 1}) {
      for (const auto& t : that(m, parity)) {
        EXPECT_TRUE(is_non_resonant(t)) << t.encoding();
        EXPECT_EQ(order(t), m);
      }
    }
  }
}

TEST(GenThatRes, OrderOne) {
  auto res = that_res(1);
  ASSERT_EQ(res.size(), 2u);
  for (const auto& e : res) {
    EXPECT_FALSE(is_non_resonant(e.tree));
    EXPECT_EQ(freq_F(e.tree), FreqPolynomial());
    EXPECT_EQ(e.tree.freq(), FreqVector::symbol(0));
  }
  EXPECT_EQ(res[0].pattern, 1);
  EXPECT_EQ(res[1].pattern, 2);
}

TEST(GenThatRes, ExactlyOneResonantNode) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& e : that_res(m)) {
      ASSERT_TRUE(e.resonant_node.has_value());
      auto nodes = resonant_nodes(e.tree);
      ASSERT_EQ(nodes.size(), 1u) << e.tree.encoding();
      EXPECT_EQ(nodes[0], *e.resonant_node);
    }
  }
}

TEST(GenThatRes, ResonanceSitsOnThreeLeafCherries) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& e : that_res(m)) {
      const auto& node = e.tree.at(*e.resonant_node);
      ASSERT_EQ(node.children().size(), 3u);
      for (const auto& c : node.children()) EXPECT_TRUE(c.is_leaf()) << e.tree.encoding();
    }
  }
}

TEST(GenThatRes, WideTreeHasResonantVariantOnEachBranch) {
  std::set<int> branch_parities;
  for (const auto& e : that_res(3)) {
    std::set<int> subtree_parities;
    for (const auto& c : e.tree.children()) {
      if (!c.is_leaf()) subtree_parities.insert(c.deco().parity);
    }
    if (subtree_parities != std::set<int>{0, 1}) continue;
    EXPECT_EQ(e.resonant_node->size(), 2u);
    branch_parities.insert(e.tree.at({e.resonant_node->front()}).deco().parity);
  }
  EXPECT_EQ(branch_parities, (std::set<int>{0, 1}));
}

TEST(Alphabet, LettersAreCherries) {
  for (const auto& l : alphabet_letters({0, 1})) {
    EXPECT_EQ(order(l), 1);
    EXPECT_EQ(l.children().size(), 3u);
    EXPECT_TRUE(is_non_resonant(l));
  }
}

TEST(GenericTrees, CountsByNodes) {
  // Rooted trees with 1..4 nodes: 1, 1, 2, 4; with two edge labels per node.
  std::vector<size_t> by_nodes(5, 0);
  for (const auto& t : generic_trees(4, {kPlain, kBlue})) {
    size_t n = 0;
    for_each_node(t, [&](const NodePath&, const DecoratedTree&) { ++n; });
    ++by_nodes[n];
  }
  EXPECT_EQ(by_nodes[1], 2u);
  EXPECT_EQ(by_nodes[2], 4u);
  EXPECT_EQ(by_nodes[3], 8u + 6u);
}
