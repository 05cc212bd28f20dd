#include <gtest/gtest.h>

#include <random>

#include "arbor/enumeration.hpp"
#include "arbor/hopf.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::tree;

namespace {

DecoratedTree letter(int i) {
  auto s = [](int j) { return "k" + std::to_string(j); };
  return tree("I[(t2,0)](-" + s(3 * i + 1) + "+" + s(3 * i + 2) + "+" + s(3 * i + 3) + "; I[(t1,1)](" + s(3 * i + 1) +
              "), I[(t1,0)](" + s(3 * i + 2) + "), I[(t1,0)](" + s(3 * i + 3) + "))");
}

const DecoratedTree A = letter(0);
const DecoratedTree B = letter(1);
const DecoratedTree C = letter(2);

Forest F(const std::string& s) { return Forest::parse(s); }

WordComb W(std::initializer_list<std::pair<Word, int>> terms) {
  WordComb out;
  for (const auto& [w, c] : terms) out.add(w, Scalar(c));
  return out;
}

std::pair<Forest, Forest> P(const Forest& a, const Forest& b) { return {a, b}; }

}  // namespace

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle(Word{A}, Word{B}), W({{{A, B}, 1}, {{B, A}, 1}}));
  EXPECT_EQ(shuffle(Word{}, Word{A, B}), W({{{A, B}, 1}}));
  EXPECT_EQ(shuffle(Word{A, B}, Word{C}), W({{{A, B, C}, 1}, {{A, C, B}, 1}, {{C, A, B}, 1}}));
  EXPECT_EQ(shuffle(Word{A}, Word{A}), W({{{A, A}, 2}}));
}

TEST(Shuffle, CountsBinomial) {
  auto s = shuffle(Word{A, B, C}, Word{letter(3), letter(4)});
  EXPECT_EQ(s.size(), 10u);
}

TEST(Deconcat, Examples) {
  EXPECT_EQ(deconcat(Word{}), WordTensor({Word{}, Word{}}));
  // Stored index 0 is the rightmost displayed letter.
  WordTensor ab;
  ab.add({Word{A, B}, Word{}}, 1);
  ab.add({Word{B}, Word{A}}, 1);
  ab.add({Word{}, Word{A, B}}, 1);
  EXPECT_EQ(deconcat(Word{A, B}), ab);
  EXPECT_EQ(deconcat(Word{A, B, C}).size(), 4u);
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode_shuffle(Word{}), W({{{}, 1}}));
  EXPECT_EQ(antipode_shuffle(Word{A}), W({{{A}, -1}}));
  EXPECT_EQ(antipode_shuffle(Word{A, B}), W({{{B, A}, 1}}));
  EXPECT_EQ(antipode_shuffle(Word{A, B, C}), W({{{C, B, A}, -1}}));
}

TEST(Antipode, DefiningIdentityOnRandomWords) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> len(1, 4);
  const Word alphabet{A, B, C};
  for (int trial = 0; trial < 30; ++trial) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(alphabet[static_cast<size_t>(pick(rng))]);
    WordComb lhs;
    for (const auto d = deconcat(w); const auto& [pair, c] : d.terms()) lhs += shuffle(antipode_shuffle(pair.first), WordComb(pair.second)).scaled(c);
    EXPECT_TRUE(lhs.empty());
  }
}

TEST(ForestProduct, Examples) {
  Forest a(A);
  Forest b(B);
  EXPECT_EQ(Forest() * a, a);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * a).size(), 2u);
  EXPECT_EQ((a * a).trees()[0], A);
}

TEST(Coproduct, CherryIsPrimitive) {
  ForestTensor expected;
  expected.add(P(Forest(A), Forest()), 1);
  expected.add(P(Forest(), Forest(A)), 1);
  EXPECT_EQ(bck_coproduct(A, Mode::Fourier), expected);
}

TEST(Coproduct, StackedBlueEdges) {
  auto t = tree(fixtures::kStacked);
  ForestTensor expected;
  expected.add(P(Forest(t), Forest()), 1);
  expected.add(P(Forest(), Forest(t)), 1);
  expected.add(P(Forest(A), F(fixtures::kStackedTrunk)), 1);
  EXPECT_EQ(bck_coproduct(t, Mode::Fourier), expected);
}

TEST(Coproduct, WideTreeProducesForest) {
  auto t = tree(fixtures::kWide);
  auto d = bck_coproduct(t, Mode::Fourier);
  EXPECT_EQ(d.size(), 5u);
  auto root_cherry = F("I[(t2,0)](-k1+k2+k3-k4-k5+k6+k7; I[(t1,1)](k4), I[(t1,0)](-k1+k2+k3), I[(t1,0)](-k5+k6+k7))");
  EXPECT_EQ(d.coeff(P(Forest({A, tree(fixtures::kRightCherry)}), root_cherry)), Scalar(1));
  auto trunk_left = F(
      "I[(t2,0)](-k1+k2+k3-k4-k5+k6+k7; I[(t1,1)](k4), I[(t1,0)](-k1+k2+k3), "
      "I[(t1,0)](-k5+k6+k7; I[(t2,0)](-k5+k6+k7; I[(t1,1)](k5), I[(t1,0)](k6), I[(t1,0)](k7))))");
  EXPECT_EQ(d.coeff(P(Forest(A), trunk_left)), Scalar(1));
}

TEST(Coproduct, GenericCutsEveryEdge) {
  auto path = tree("I[(t1,0)](0; I[(t2,0)](0))");
  auto d = bck_coproduct(path, Mode::Generic);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.coeff(P(F("I[(t2,0)](0)"), F("I[(t1,0)](0)"))), Scalar(1));
}

TEST(Graft, SingleSurvivingSite) {
  auto g = graft(Forest(A), F(fixtures::kStackedTrunk), Mode::Fourier);
  ForestComb expected(F(fixtures::kStacked));
  EXPECT_EQ(g, expected);
}

TEST(Graft, EmptyAndNoMatch) {
  EXPECT_EQ(graft(Forest(A), Forest(), Mode::Fourier), graft(Forest(), Forest(A), Mode::Fourier));
  EXPECT_TRUE(graft(Forest(A), Forest(B), Mode::Fourier).empty());
}

TEST(GraftAdjoint, Examples) {
  auto leaf = tree("I[(t1,0)](0)");
  ForestTensor single;
  single.add(P(Forest(leaf), Forest()), 1);
  EXPECT_EQ(graft_adjoint(leaf, Mode::Generic), single);

  auto t = tree(fixtures::kStacked);
  ForestTensor expected;
  expected.add(P(Forest(t), Forest()), 1);
  expected.add(P(Forest(A), F(fixtures::kStackedTrunk)), 1);
  EXPECT_EQ(graft_adjoint(t, Mode::Fourier), expected);
}

TEST(InnerProduct, Examples) {
  auto t0 = Forest(tree(fixtures::kT0));
  auto t1 = Forest(tree(fixtures::kT1));
  auto t3 = Forest(tree(fixtures::kT3));
  EXPECT_EQ(inner_product(t1, t1), Scalar(2));
  EXPECT_EQ(inner_product(t0, t1), Scalar(0));
  EXPECT_EQ(inner_product(t3, t3), Scalar(4));
}

TEST(Arborify, Examples) {
  EXPECT_EQ(arborify(A, Mode::Fourier), W({{{A}, 1}}));
  auto trunk_letter = tree(fixtures::kStackedTrunk);
  EXPECT_EQ(arborify(tree(fixtures::kStacked), Mode::Fourier), W({{{trunk_letter, A}, 1}}));
  auto wide = arborify(tree(fixtures::kWide), Mode::Fourier);
  EXPECT_EQ(wide.size(), 2u);
  for (const auto& [w, c] : wide.terms()) {
    EXPECT_EQ(w.size(), 3u);
    EXPECT_EQ(c, Scalar(1));
  }
}

TEST(Arborify, EmptyAndOrderZero) {
  EXPECT_EQ(arborify(Forest(), Mode::Fourier), W({{{}, 1}}));
  EXPECT_EQ(arborify(tree(fixtures::kT0), Mode::Fourier), W({{{}, 1}}));
  EXPECT_THROW(arborify(tree(fixtures::kT1), Mode::Fourier), std::domain_error);
}

TEST(Arborify, VariantsAgreeOnFourierTrees) {
  TreeSpaceSpec spec;
  for (int m = 1; m <= 3; ++m) {
    spec.order = m;
    for (const auto& t : gen_That(spec)) {
      EXPECT_EQ(arborify(t, Mode::Fourier, ArbVariant::Coproduct), arborify(t, Mode::Fourier, ArbVariant::Adjoint));
    }
  }
}

TEST(HairerKelly, SmallTrees) {
  auto node = tree("I[(t2,0)](0)");
  EXPECT_EQ(hairer_kelly(node), W({{{node}, 1}}));
  auto path = tree("I[(t1,0)](0; I[(t2,0)](0))");
  // The empty cut keeps the whole tree as one letter; the root-most letter is
  // stored first.
  auto hk = hairer_kelly(path);
  EXPECT_EQ(hk, W({{{path}, 1}, {{tree("I[(t1,0)](0)"), node}, 1}}));
  EXPECT_EQ(hk, hairer_kelly(path, ArbVariant::Adjoint));
}
