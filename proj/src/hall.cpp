#include "ppv/hall.hpp"

#include <algorithm>

#include "ppv/root_datum.hpp"

namespace ppv {

DimVector word_content(const Word& w, int num_vertices) {
    DimVector beta(num_vertices, 0);
    for (int i : w) beta.at(i) += 1;
    return beta;
}

std::vector<Word> words_of_content(const DimVector& beta) {
    std::vector<Word> out;
    Word letters;
    for (size_t i = 0; i < beta.size(); ++i)
        for (int k = 0; k < beta[i]; ++k) letters.push_back(static_cast<int>(i));
    // letters starts sorted; next_permutation walks lexicographic order
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

long HallEngine::eval_word(const Word& w, int class_id) {
    const Catalog& cat = catalog();
    if (word_content(w, cat.quiver().num_vertices()) != cat.classes()[class_id].beta)
        throw DimMismatch("word content differs from the dimension vector");
    if (w.empty()) return 1;
    auto key = std::make_pair(w, class_id);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    Word rest(w.begin() + 1, w.end());
    long total = 0;
    for (const Stratum& s : eng_->down(class_id, w.front()))
        total += s.chi * eval_word(rest, s.class_id);
    memo_.emplace(std::move(key), total);
    return total;
}

long HallEngine::eval_word(const Word& w, const QModule& x) {
    if (word_content(w, x.dq->num_vertices()) != x.dims)
        throw DimMismatch("word content differs from the dimension vector");
    return eval_word(w, catalog().classify(x));
}

std::vector<mpq_class> HallEngine::eval_delta_vector(int class_id) {
    std::vector<mpq_class> out;
    for (const Word& w : words_of_content(catalog().classes()[class_id].beta))
        out.push_back(eval_word(w, class_id));
    return out;
}

mpq_class HallEngine::serre_defect(int i, int j, int class_id) {
    if (i == j) throw ConfigError("serre_defect needs two distinct vertices");
    int a = cartan_.at(i, j);
    const DimVector& beta = catalog().classes()[class_id].beta;
    DimVector expect(cartan_.n, 0);
    expect[i] += 1;
    expect[j] += 1 - a;
    if (beta != expect)
        throw DimMismatch("serre_defect needs dim = alpha_i + (1 - a_ij) alpha_j");
    mpq_class defect = 0;
    mpz_class pf = 1;  // p!
    for (int p = 0; p <= 1 - a; ++p) {
        int q = 1 - a - p;
        if (p > 0) pf *= p;
        mpz_class qf = 1;
        for (int k = 2; k <= q; ++k) qf *= k;
        Word w;
        w.insert(w.end(), p, j);
        w.push_back(i);
        w.insert(w.end(), q, j);
        mpq_class term(eval_word(w, class_id));
        term /= mpq_class(pf * qf);
        defect += (p % 2 == 0) ? term : -term;
    }
    return defect;
}

const HallEngine::WordBasis& HallEngine::word_basis(const DimVector& beta) {
    auto hit = bases_.find(beta);
    if (hit != bases_.end()) return hit->second;
    const Catalog& cat = catalog();
    const std::vector<int>& cls = cat.classes_of(beta);
    std::vector<Word> words = words_of_content(beta);
    RatField Q;
    WordBasis wb;
    QMatrix picked(Q, 0, static_cast<int>(cls.size()));
    for (const Word& w : words) {
        QMatrix row(Q, 1, static_cast<int>(cls.size()));
        for (size_t c = 0; c < cls.size(); ++c) row.at(0, int(c)) = eval_word(w, cls[c]);
        QMatrix cand = picked.vstack(row);
        if (cand.rank() == picked.rows() + 1) {
            picked = std::move(cand);
            wb.words.push_back(w);
        }
    }
    wb.rank = picked.rows();
    long kostant = kostant_count(cartan_, beta);
    if (wb.rank != kostant)
        throw RankDeficient("word evaluation rank " + std::to_string(wb.rank) +
                            " below Kostant count " + std::to_string(kostant) +
                            " at a slice");
    return bases_.emplace(beta, std::move(wb)).first->second;
}

mpq_class HallEngine::eval_elem(const MElem& f, int class_id) {
    const WordBasis& wb = word_basis(f.beta);
    mpq_class v = 0;
    for (size_t k = 0; k < wb.words.size(); ++k)
        v += mpq_class(f.coeffs[k] * eval_word(wb.words[k], class_id));
    return v;
}

MElem HallEngine::elem_from_values(const DimVector& beta,
                                   const std::vector<mpq_class>& values) {
    const WordBasis& wb = word_basis(beta);
    const std::vector<int>& cls = catalog().classes_of(beta);
    RatField Q;
    QMatrix a(Q, static_cast<int>(cls.size()), wb.rank);
    for (size_t r = 0; r < cls.size(); ++r)
        for (int c = 0; c < wb.rank; ++c) a.at(int(r), c) = eval_word(wb.words[c], cls[r]);
    auto sol = a.solve(values);
    if (!sol.has_value())
        throw NotInSpan("pointwise values lie outside the word-function span");
    return {beta, std::move(*sol)};
}

MElem HallEngine::f_component(const MElem& f, int i) {
    DimVector gamma = f.beta;
    gamma.at(i) -= 1;
    if (gamma[i] < 0)
        throw DimMismatch("component index exceeds the dimension vector");
    const std::vector<int>& cls = catalog().classes_of(gamma);
    std::vector<mpq_class> values;
    for (int c : cls) values.push_back(eval_elem(f, catalog().class_add_simple(c, i)));
    return elem_from_values(gamma, values);
}

MElem HallEngine::unit() const {
    return {DimVector(cartan_.n, 0), {1}};
}

MElem HallEngine::elem_of_word(const Word& w) {
    DimVector beta = word_content(w, cartan_.n);
    const std::vector<int>& cls = catalog().classes_of(beta);
    std::vector<mpq_class> values;
    for (int c : cls) values.push_back(eval_word(w, c));
    return elem_from_values(beta, values);
}

}  // namespace ppv
