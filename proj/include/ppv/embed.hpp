#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "ppv/module.hpp"

namespace ppv {

/// A monomorphism x -> q_nu together with its cokernel.
template <class F>
struct Embedding {
    LambdaModule<F> ambient;           // q_nu, summands ordered by vertex
    std::vector<Matrix<F>> inj;        // per-vertex injection matrices
    LambdaModule<F> coker;
    std::vector<Matrix<F>> proj;       // per-vertex projections ambient -> coker
};

/// Multiplicity of each simple in the socle.
template <class F>
DimVector socle_mults(const LambdaModule<F>& x) {
    return socle_dims(x);
}

/// Smallest dominant nu with (nu; alpha_i) >= socle multiplicity and
/// >= (lambda; alpha_i): componentwise max(a_i, lambda_i, 0).
inline Weight choose_nu(const DimVector& socle, const Weight& lambda) {
    Weight nu(socle.size());
    for (size_t i = 0; i < socle.size(); ++i)
        nu[i] = std::max(socle[i], std::max(lambda[i], 0));
    return nu;
}

template <class F>
Weight choose_nu(const LambdaModule<F>& x, const Weight& lambda) {
    return choose_nu(socle_mults(x), lambda);
}

/// Direct sum of nu_i copies of each injective, ordered by vertex — the
/// ambient-module layout assumed by embed().
template <class F>
LambdaModule<F> injective_sum_of(const std::vector<LambdaModule<F>>& injectives,
                                 const Weight& nu) {
    if (!is_dominant(nu)) throw NotDominant("injective multiplicities must be >= 0");
    const LambdaModule<F>& model = injectives.at(0);
    LambdaModule<F> q =
        make_zero_module(*model.dq, model.field, DimVector(model.dq->num_vertices(), 0));
    for (size_t i = 0; i < nu.size(); ++i)
        for (int t = 0; t < nu[i]; ++t) q = direct_sum(q, injectives[i]);
    return q;
}

namespace detail {

/// Basis of the socle component at vertex i: kernel of the stacked outgoing
/// arrow maps.
template <class F>
Matrix<F> socle_basis_at(const LambdaModule<F>& x, int i) {
    Matrix<F> stack(x.field, 0, x.dims[i]);
    for (int a = 0; a < x.dq->num_arrows(); ++a)
        if (x.dq->arrow(a).src == i) stack = stack.vstack(x.mats[a]);
    return stack.kernel_basis();
}

}  // namespace detail

/// Deterministic monomorphism x -> q_nu. A module map is injective iff it is
/// injective on the socle, and maps x -> q_i kill every socle component
/// except the one at i; so it suffices to pick, for each vertex i, Hom-basis
/// combinations whose induced functionals on the socle at i are independent.
/// Throws NoEmbedding when some socle multiplicity exceeds (nu; alpha_i).
template <class F>
Embedding<F> embed(const LambdaModule<F>& x, const Weight& nu,
                   const std::vector<LambdaModule<F>>& injectives) {
    const F& field = x.field;
    const DoubleQuiver& dq = *x.dq;
    int nv = dq.num_vertices();
    DimVector a = socle_mults(x);
    for (int i = 0; i < nv; ++i)
        if (a[i] > nu[i])
            throw NoEmbedding("socle multiplicity " + std::to_string(a[i]) +
                              " exceeds (nu;alpha_" + std::to_string(i + 1) + ") = " +
                              std::to_string(nu[i]));

    Embedding<F> e;
    e.ambient = injective_sum_of(injectives, nu);

    // chosen maps x -> q_i, one per copy of q_i inside q_nu (zero if unused)
    std::vector<std::vector<std::vector<Matrix<F>>>> chosen(nv);
    for (int i = 0; i < nv; ++i) {
        chosen[i].assign(nu[i], std::vector<Matrix<F>>());
        for (int t = 0; t < nu[i]; ++t) {
            std::vector<Matrix<F>> zero;
            for (int v = 0; v < nv; ++v)
                zero.push_back(Matrix<F>(field, injectives[i].dims[v], x.dims[v]));
            chosen[i][t] = std::move(zero);
        }
        if (a[i] == 0) continue;
        auto homs = hom_basis(x, injectives[i]);
        Matrix<F> soc = detail::socle_basis_at(x, i);           // x_i socle columns
        Matrix<F> line = detail::socle_basis_at(injectives[i], i);  // 1-dim
        assert(line.cols() == 1);
        // functional matrix: rows = hom elements, cols = socle vectors of x
        Matrix<F> L(field, static_cast<int>(homs.size()), soc.cols());
        for (size_t k = 0; k < homs.size(); ++k)
            for (int j = 0; j < soc.cols(); ++j) {
                std::vector<typename F::Elem> sj;
                for (int r = 0; r < soc.rows(); ++r) sj.push_back(soc.at(r, j));
                Matrix<F> img(field, homs[k][i].rows(), 1);
                for (int r = 0; r < img.rows(); ++r) {
                    typename F::Elem acc = field.zero();
                    for (int c = 0; c < homs[k][i].cols(); ++c)
                        acc = field.add(acc, field.mul(homs[k][i].at(r, c), sj[c]));
                    img.at(r, 0) = acc;
                }
                std::vector<typename F::Elem> rhs;
                for (int r = 0; r < img.rows(); ++r) rhs.push_back(img.at(r, 0));
                auto coeff = line.solve(rhs);
                assert(coeff.has_value() && "socle image leaves the socle line");
                L.at(int(k), j) = (*coeff)[0];
            }
        // greedily take hom elements with independent socle functionals
        Matrix<F> picked(field, 0, soc.cols());
        int t = 0;
        for (size_t k = 0; k < homs.size() && t < a[i]; ++k) {
            Matrix<F> row(field, 1, soc.cols());
            for (int j = 0; j < soc.cols(); ++j) row.at(0, j) = L.at(int(k), j);
            Matrix<F> cand = picked.vstack(row);
            if (cand.rank() == picked.rows() + 1) {
                picked = std::move(cand);
                chosen[i][t++] = homs[k];
            }
        }
        if (t < a[i])
            throw NoEmbedding("socle functionals span too little (field artifact?)");
    }

    // assemble the per-vertex injection by stacking the chosen maps in the
    // ambient layout
    for (int v = 0; v < nv; ++v) {
        Matrix<F> col(field, 0, x.dims[v]);
        for (int i = 0; i < nv; ++i)
            for (int t = 0; t < nu[i]; ++t) col = col.vstack(chosen[i][t][v]);
        assert(col.rows() == e.ambient.dims[v]);
        e.inj.push_back(std::move(col));
    }
    for (int v = 0; v < nv; ++v)
        if (e.inj[v].rank() != x.dims[v])
            throw NoEmbedding("constructed map not injective at a vertex");
    for (int ar = 0; ar < dq.num_arrows(); ++ar) {
        const auto& arw = dq.arrow(ar);
        assert(e.inj[arw.tgt] * x.mats[ar] == e.ambient.mats[ar] * e.inj[arw.src]);
    }

    auto q = quotient(e.ambient, e.inj);
    e.coker = std::move(q.module);
    e.proj = std::move(q.projections);
    return e;
}

/// phi_i: multiplicity of s_i in the socle of q_nu / x.
template <class F>
int phi(const Embedding<F>& e, int i) {
    return socle_dims(e.coker)[i];
}

}  // namespace ppv
