#include "ppv/pp_algebra.hpp"

#include <cassert>

namespace ppv {

int PathAlgebra::total_dim() const {
    int t = 0;
    for (const auto& d : degrees) t += static_cast<int>(d.basis.size());
    return t;
}

int PathAlgebra::dim_between(int i, int j) const {
    int t = 0;
    for (const auto& d : degrees)
        for (int b : d.basis)
            if (d.ends[b] == std::make_pair(i, j)) ++t;
    return t;
}

std::vector<mpq_class> PathAlgebra::right_mult(int d, int k, int a) const {
    const Degree& next = degrees[d + 1];
    int span_k = degrees[d].basis[k];
    for (size_t s = 0; s < next.span.size(); ++s)
        if (next.span[s] == std::make_pair(span_k, a)) return next.expansion[s];
    return std::vector<mpq_class>(next.basis.size(), 0);  // not composable
}

PathAlgebra build_path_algebra(const DoubleQuiver& dq, int max_degree, long max_span) {
    RatField Q;
    PathAlgebra alg;
    alg.dq = &dq;
    int nv = dq.num_vertices();

    PathAlgebra::Degree deg0;
    for (int v = 0; v < nv; ++v) {
        deg0.span.push_back({v, -1});
        deg0.ends.push_back({v, v});
        deg0.basis.push_back(v);
        std::vector<mpq_class> e(nv, 0);
        e[v] = 1;
        deg0.expansion.push_back(std::move(e));
    }
    alg.degrees.push_back(std::move(deg0));

    long span_total = nv;
    for (int d = 1;; ++d) {
        if (d > max_degree)
            throw CapExceeded("path algebra not finite-dimensional within degree " +
                              std::to_string(max_degree));
        const PathAlgebra::Degree& prev = alg.degrees[d - 1];
        PathAlgebra::Degree deg;
        for (size_t k = 0; k < prev.basis.size(); ++k) {
            auto [src, tgt] = prev.ends[prev.basis[k]];
            for (int a = 0; a < dq.num_arrows(); ++a) {
                if (dq.arrow(a).src != tgt) continue;
                deg.span.push_back({prev.basis[k], a});
                deg.ends.push_back({src, dq.arrow(a).tgt});
            }
        }
        span_total += static_cast<long>(deg.span.size());
        if (span_total > max_span)
            throw CapExceeded("spanning-set size exceeds " + std::to_string(max_span));

        int ns = static_cast<int>(deg.span.size());
        // map (previous basis position, arrow) -> span position
        auto span_pos = [&](int prev_span, int a) {
            for (int s = 0; s < ns; ++s)
                if (deg.span[s] == std::make_pair(prev_span, a)) return s;
            return -1;
        };

        std::vector<std::vector<mpq_class>> rows;
        if (d >= 2) {
            const PathAlgebra::Degree& tail = alg.degrees[d - 2];
            for (size_t kp = 0; kp < tail.basis.size(); ++kp) {
                int v = tail.ends[tail.basis[kp]].second;
                std::vector<mpq_class> row(ns, 0);
                bool nonzero = false;
                for (int a = 0; a < dq.num_arrows(); ++a) {
                    if (dq.arrow(a).tgt != v) continue;
                    // expansion of (tail elem) * mate(a) in the previous basis
                    std::vector<mpq_class> mid =
                        alg.right_mult(d - 2, static_cast<int>(kp), dq.arrow(a).mate);
                    for (size_t k = 0; k < mid.size(); ++k) {
                        if (mid[k] == 0) continue;
                        int s = span_pos(prev.basis[k], a);
                        assert(s >= 0);
                        row[s] += dq.arrow(a).sign * mid[k];
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        QMatrix m(Q, static_cast<int>(rows.size()), ns);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < ns; ++j) m.at(int(r), j) = rows[r][j];
        std::vector<int> pivots = m.rref();
        std::vector<int> pivot_row(ns, -1);
        for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = int(r);
        for (int s = 0; s < ns; ++s)
            if (pivot_row[s] < 0) deg.basis.push_back(s);
        std::vector<int> basis_slot(ns, -1);
        for (size_t k = 0; k < deg.basis.size(); ++k) basis_slot[deg.basis[k]] = int(k);
        for (int s = 0; s < ns; ++s) {
            std::vector<mpq_class> exp(deg.basis.size(), 0);
            if (pivot_row[s] < 0) {
                exp[basis_slot[s]] = 1;
            } else {
                int r = pivot_row[s];
                for (int j = 0; j < ns; ++j) {
                    if (j == s || basis_slot[j] < 0) continue;
                    exp[basis_slot[j]] = mpq_class(-m.at(r, j));
                }
            }
            deg.expansion.push_back(std::move(exp));
        }
        bool done = deg.basis.empty();
        alg.degrees.push_back(std::move(deg));
        if (done) return alg;
    }
}

QModule injective_module(const PathAlgebra& alg, int i) {
    const DoubleQuiver& dq = *alg.dq;
    RatField Q;
    int nv = dq.num_vertices();

    // basis of e_i Lambda: basis elements starting at i, graded by target
    struct Elem {
        int degree, k;  // position within the degree's basis list
    };
    std::vector<std::vector<Elem>> by_tgt(nv);
    for (size_t d = 0; d + 1 < alg.degrees.size(); ++d)
        for (size_t k = 0; k < alg.degrees[d].basis.size(); ++k) {
            auto [src, tgt] = alg.basis_ends(int(d), int(k));
            if (src == i) by_tgt[tgt].push_back({int(d), int(k)});
        }

    auto local_index = [&](int tgt, int degree, int k) {
        for (size_t s = 0; s < by_tgt[tgt].size(); ++s)
            if (by_tgt[tgt][s].degree == degree && by_tgt[tgt][s].k == k)
                return static_cast<int>(s);
        assert(false && "basis element not found");
        return -1;
    };

    // right multiplication by arrow b: e_i paths into src(b) -> into tgt(b)
    auto right_mult_matrix = [&](int b) {
        const auto& ar = dq.arrow(b);
        QMatrix m(Q, static_cast<int>(by_tgt[ar.tgt].size()),
                  static_cast<int>(by_tgt[ar.src].size()));
        for (size_t c = 0; c < by_tgt[ar.src].size(); ++c) {
            Elem e = by_tgt[ar.src][c];
            std::vector<mpq_class> exp = alg.right_mult(e.degree, e.k, b);
            for (size_t k = 0; k < exp.size(); ++k) {
                if (exp[k] == 0) continue;
                auto [src, tgt] = alg.basis_ends(e.degree + 1, int(k));
                assert(src == i && tgt == ar.tgt);
                m.at(local_index(ar.tgt, e.degree + 1, int(k)), int(c)) = exp[k];
            }
        }
        return m;
    };

    QModule q;
    q.dq = &dq;
    q.field = Q;
    q.dims.resize(nv);
    for (int v = 0; v < nv; ++v) q.dims[v] = static_cast<int>(by_tgt[v].size());
    for (int a = 0; a < dq.num_arrows(); ++a)
        q.mats.push_back(right_mult_matrix(dq.arrow(a).mate).transpose());
    validate(q);
    return q;
}

QModule injective_sum(const PathAlgebra& alg, const Weight& nu) {
    if (!is_dominant(nu)) throw NotDominant("injective multiplicities must be >= 0");
    QModule q = make_zero_module(*alg.dq, RatField{}, DimVector(alg.dq->num_vertices(), 0));
    for (size_t v = 0; v < nu.size(); ++v) {
        if (nu[v] == 0) continue;
        QModule qi = injective_module(alg, static_cast<int>(v));
        for (int k = 0; k < nu[v]; ++k) q = direct_sum(q, qi);
    }
    return q;
}

}  // namespace ppv
