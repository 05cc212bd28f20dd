#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "arbor/enumeration.hpp"
#include "arbor/tree.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::tree;

namespace {

struct FlatNode {
  int parent;
  EdgeDecoration deco;
};

void flatten(const DecoratedTree& t, int parent, std::vector<FlatNode>& out) {
  int self = static_cast<int>(out.size());
  out.push_back({parent, t.deco()});
  for (const auto& c : t.children()) flatten(c, self, out);
}

// Counts decoration-preserving permutations of the node set that preserve
// the parent relation.
int64_t brute_force_automorphisms(const DecoratedTree& t) {
  std::vector<FlatNode> nodes;
  flatten(t, -1, nodes);
  std::vector<int> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  int64_t count = 0;
  do {
    bool ok = true;
    for (size_t i = 0; i < nodes.size() && ok; ++i) {
      const auto& a = nodes[i];
      const auto& b = nodes[static_cast<size_t>(perm[i])];
      int mapped_parent = a.parent < 0 ? -1 : perm[static_cast<size_t>(a.parent)];
      ok = a.deco == b.deco && b.parent == mapped_parent;
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

FreqPolynomial k(Symbol s) { return FreqPolynomial::symbol(s); }

}  // namespace

TEST(Canonicalize, ChildOrderIsIrrelevant) {
  auto a = tree("I[(t2,0)](-k1+k2+k3; I[(t1,0)](k3), I[(t1,1)](k1), I[(t1,0)](k2))");
  EXPECT_EQ(a, tree(fixtures::kCherry));
  EXPECT_EQ(canonicalize(tree(fixtures::kT0)), tree(fixtures::kT0));
  auto t2b = tree(
      "I[(t1,0)](-k1+k2+k3-k4+k5; I[(t2,0)](-k1+k2+k3-k4+k5; "
      "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,0)](k3), I[(t1,0)](k2), I[(t1,1)](k1))), "
      "I[(t1,0)](k5), I[(t1,1)](k4)))");
  EXPECT_EQ(t2b.encoding(), tree(fixtures::kT2).encoding());
}

TEST(Canonicalize, Idempotent) {
  TreeSpaceSpec spec;
  spec.order = 3;
  spec.up_to = true;
  for (const auto& t : gen_T0(spec)) {
    EXPECT_EQ(canonicalize(canonicalize(t)), canonicalize(t));
    EXPECT_EQ(DecoratedTree::parse(t.encoding()), t);
  }
}

TEST(Tree, FrequencyIdentityIsEnforced) {
  EXPECT_THROW(tree("I[(t2,0)](k1; I[(t1,1)](k1), I[(t1,0)](k2), I[(t1,0)](k3))"), std::invalid_argument);
  EXPECT_THROW(tree("I[(t2,0](k"), std::invalid_argument);
}

TEST(SymmetryFactor, PaperValues) {
  EXPECT_EQ(symmetry_factor(tree(fixtures::kT0)), 1);
  EXPECT_EQ(symmetry_factor(tree(fixtures::kT1)), 2);
  EXPECT_EQ(symmetry_factor(tree(fixtures::kT2)), 2);
  EXPECT_EQ(symmetry_factor(tree(fixtures::kT3)), 4);
}

TEST(SymmetryFactor, MatchesAutomorphismCount) {
  TreeSpaceSpec spec;
  spec.order = 2;
  spec.up_to = true;
  for (int parity : {0, 1}) {
    spec.parity = parity;
    for (const auto& t : gen_T0(spec)) EXPECT_EQ(symmetry_factor(t), brute_force_automorphisms(t)) << t.encoding();
  }
  for (const auto& t : generic_trees(5, {kPlain, kBlue})) {
    EXPECT_EQ(symmetry_factor(t), brute_force_automorphisms(t)) << t.encoding();
  }
}

TEST(SymmetryFactor, ForestCountsRepeatedTrees) {
  auto c = tree(fixtures::kCherry);
  EXPECT_EQ(symmetry_factor(Forest({c, c})), 2 * 2 * 2);
  EXPECT_EQ(symmetry_factor(Forest()), 1);
}

TEST(Order, Examples) {
  EXPECT_EQ(order(tree(fixtures::kCherry)), 1);
  EXPECT_EQ(order(tree(fixtures::kT0)), 0);
  EXPECT_EQ(order(tree(fixtures::kT2)), 2);
}

TEST(FreqF, Examples) {
  EXPECT_TRUE(freq_F(Forest()).is_zero());
  auto l = FreqVector::parse("-k1+k2+k3");
  FreqPolynomial expected = poly_square_of_linear(l) + k(1) * k(1) - k(2) * k(2) - k(3) * k(3);
  EXPECT_EQ(freq_F(tree(fixtures::kCherry)), expected);
  FreqPolynomial expanded =
      (k(1) * k(1)).scaled(2) - (k(1) * k(2)).scaled(2) - (k(1) * k(3)).scaled(2) + (k(2) * k(3)).scaled(2);
  EXPECT_EQ(freq_F(tree(fixtures::kCherry)), expanded);
}

TEST(FreqF, InvariantUnderCanonicalization) {
  TreeSpaceSpec spec;
  spec.order = 2;
  spec.up_to = true;
  for (const auto& t : gen_T0(spec)) EXPECT_EQ(freq_F(canonicalize(t)), freq_F(t));
}

TEST(FreqF, ForestIsAdditive) {
  auto a = tree(fixtures::kCherry);
  auto b = tree(fixtures::kRightCherry);
  EXPECT_EQ(freq_F(Forest({a, b})), freq_F(a) + freq_F(b));
}

TEST(Resonance, Examples) {
  EXPECT_TRUE(is_non_resonant(tree(fixtures::kCherry)));
  EXPECT_FALSE(is_non_resonant(tree("I[(t2,0)](k; I[(t1,1)](k1), I[(t1,0)](k1), I[(t1,0)](k))")));
  EXPECT_TRUE(is_non_resonant(tree(fixtures::kT0)));
}

TEST(Render, Encodings) {
  EXPECT_EQ(render(tree(fixtures::kT0)), "I[(t1,0)](k)");
  EXPECT_EQ(render(Forest()), "1");
  EXPECT_EQ(render(tree(fixtures::kT1)),
            "I[(t1,0)](-k1+k2+k3; I[(t2,0)](-k1+k2+k3; I[(t1,0)](k2), I[(t1,0)](k3), I[(t1,1)](k1)))");
  auto f = Forest::parse(fixtures::kCherry + " * " + fixtures::kT0);
  EXPECT_EQ(Forest::parse(f.encoding()), f);
  EXPECT_EQ(Forest::parse("1"), Forest());
}

TEST(Render, Latex) {
  EXPECT_EQ(render(tree(fixtures::kT0), RenderFormat::Latex), "\\mathcal{I}_{(\\mathfrak{t}_1,0)}\\left(\\lambda_{k}\\right)");
  EXPECT_EQ(render(tree(fixtures::kT1), RenderFormat::Latex), 
            "\\mathcal{I}_{(\\mathfrak{t}_1,0)}\\left(\\lambda_{-k_{1}+k_{2}+k_{3}} "
            "\\mathcal{I}_{(\\mathfrak{t}_2,0)}\\left(\\lambda_{-k_{1}+k_{2}+k_{3}} "
            "\\mathcal{I}_{(\\mathfrak{t}_1,0)}\\left(\\lambda_{k_{2}}\\right) "
            "\\mathcal{I}_{(\\mathfrak{t}_1,0)}\\left(\\lambda_{k_{3}}\\right) "
            "\\mathcal{I}_{(\\mathfrak{t}_1,1)}\\left(\\lambda_{k_{1}}\\right)\\right)\\right)");
}
