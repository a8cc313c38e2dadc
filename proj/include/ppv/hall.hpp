#pragma once

#include <map>
#include <vector>

#include "ppv/grassmann.hpp"

namespace ppv {

/// A word (i_1, ..., i_r) of vertices, standing for the convolution product
/// 1_{i_1} * ... * 1_{i_r} of the characteristic functions of the simples.
using Word = std::vector<int>;

DimVector word_content(const Word& w, int num_vertices);

/// All words with the given content, in lexicographic order.
std::vector<Word> words_of_content(const DimVector& beta);

/// An element of the degree-beta piece of the composition algebra, stored as
/// rational coefficients over the word basis chosen by HallEngine::word_basis.
struct MElem {
    DimVector beta;
    std::vector<mpq_class> coeffs;

    bool operator==(const MElem&) const = default;
};

/// Word-function evaluation on catalog classes, with the word bases that
/// realize each graded piece as concrete functions.
class HallEngine {
  public:
    explicit HallEngine(GrassEngine& eng) : eng_(&eng) {}

    const Catalog& catalog() const { return eng_->catalog(); }
    GrassEngine& grass() { return *eng_; }

    /// (1_{i_1} * ... * 1_{i_r})(x): peel the first letter through the
    /// quotient-by-s_i strata and recurse. Memoized per (word, class).
    long eval_word(const Word& w, int class_id);
    long eval_word(const Word& w, const QModule& x);

    /// Values of every word of content beta(x) at x, in lexicographic word
    /// order: the coordinates of the delta functional of x.
    std::vector<mpq_class> eval_delta_vector(int class_id);

    /// sum_p (-1)^p F_j^(p) F_i F_j^(1-a_ij-p) evaluated at x, divided
    /// powers taken with exact 1/p! coefficients. Zero for every module.
    mpq_class serre_defect(int i, int j, int class_id);

    struct WordBasis {
        std::vector<Word> words;  // maximal independent subset, first rows win
        int rank;                 // = kostant_count(beta)
    };
    /// Row-reduce the words x classes evaluation matrix at beta. Throws
    /// RankDeficient when the rank falls short of the Kostant count.
    const WordBasis& word_basis(const DimVector& beta);

    /// Value of a basis-expanded element at a class.
    mpq_class eval_elem(const MElem& f, int class_id);

    /// The function x -> f(x + s_i) on the slice below, re-expressed in its
    /// word basis. Throws NotInSpan if it fails to lie in the span (it
    /// always does) and DimMismatch when beta - alpha_i has a negative entry.
    MElem f_component(const MElem& f, int i);

    /// Solve pointwise values on the classes of beta into the word basis.
    MElem elem_from_values(const DimVector& beta, const std::vector<mpq_class>& values);

    /// The unit of the degree-zero piece.
    MElem unit() const;
    /// A single word as a basis-expanded element of its graded piece.
    MElem elem_of_word(const Word& w);

  private:
    GrassEngine* eng_;
    std::map<std::pair<Word, int>, long> memo_;
    std::map<DimVector, WordBasis> bases_;
    CartanMatrix cartan_ = build_cartan(eng_->catalog().quiver().graph);
};

}  // namespace ppv
