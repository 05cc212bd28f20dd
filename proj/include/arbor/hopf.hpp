#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "arbor/linear.hpp"
#include "arbor/tree.hpp"

namespace arbor {

// Stored index 0 is the root-most letter, which is the rightmost letter when
// the word is displayed. Appending to storage prepends on the display.
using Word = std::vector<DecoratedTree>;

using WordComb = LinearCombination<Word>;
using ForestComb = LinearCombination<Forest>;
using WordTensor = Tensor<Word, Word>;
using ForestTensor = Tensor<Forest, Forest>;
using ForestTensor3 = LinearCombination<std::tuple<Forest, Forest, Forest>>;
using WordTensor3 = LinearCombination<std::tuple<Word, Word, Word>>;

// Display order, letters separated by " | ", empty word "eps".
std::string word_str(const Word& w, RenderFormat fmt = RenderFormat::Ascii);
Word concat(const Word& a, const Word& b);

WordComb shuffle(const Word& u, const Word& v);
WordComb shuffle(const WordComb& u, const WordComb& v);
// Left factor is the displayed prefix, i.e. the stored suffix.
WordTensor deconcat(const Word& w);
WordTensor deconcat(const WordComb& w);
WordComb antipode_shuffle(const Word& w);
// Splits off the displayed leftmost letter: au -> a (x) u.
WordTensor deconcat_first(const Word& w);
WordTensor3 deconcat_left(const WordTensor& d);
WordTensor3 deconcat_right(const WordTensor& d);

// Generic: every edge can be cut, letters are single nodes.
// Fourier: only T2 edges can be cut, letters are T2 cherries over T1 leaves.
enum class Mode { Generic, Fourier };
enum class ArbVariant { Coproduct, Adjoint };

bool root_cuttable(const DecoratedTree& t, Mode mode);
bool is_letter(const DecoratedTree& t, Mode mode);

ForestTensor bck_coproduct(const DecoratedTree& t, Mode mode);
ForestTensor bck_coproduct(const Forest& f, Mode mode);
ForestTensor3 coproduct_left(const ForestTensor& d, Mode mode);
ForestTensor3 coproduct_right(const ForestTensor& d, Mode mode);

// sigma and tau are empty forests or single trees.
ForestComb graft(const Forest& sigma, const Forest& tau, Mode mode);
DecoratedTree graft_at(const DecoratedTree& sigma, const DecoratedTree& tau, const NodePath& node);
// Single-cut coproduct: tau (x) 1 plus every single admissible cut.
ForestTensor graft_adjoint(const DecoratedTree& tau, Mode mode);

Scalar inner_product(const Forest& a, const Forest& b, bool with_freq = false);
Scalar inner_product(const ForestComb& a, const ForestComb& b, bool with_freq = false);
Scalar inner_product(const ForestTensor& a, const ForestTensor& b, bool with_freq = false);

// Throws std::domain_error when a Fourier tree cannot be cut into letters.
void check_letter_structure(const DecoratedTree& t);

WordComb arborify(const Forest& f, Mode mode, ArbVariant variant = ArbVariant::Coproduct);
WordComb arborify(const DecoratedTree& t, Mode mode, ArbVariant variant = ArbVariant::Coproduct);

// Words over the alphabet of trees; generic mode.
WordComb hairer_kelly(const Forest& f, ArbVariant variant = ArbVariant::Coproduct);
WordComb hairer_kelly(const DecoratedTree& t, ArbVariant variant = ArbVariant::Coproduct);

}  // namespace arbor
