#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ppv/graph.hpp"
#include "ppv/matrix.hpp"
#include "ppv/quiver.hpp"

namespace ppv {

/// A finite-dimensional module over the preprojective algebra: one vector
/// space per vertex, one matrix per arrow of the double quiver, subject to
/// the preprojective relations and nilpotency.
///
/// The module keeps a non-owning pointer to its quiver; quivers are owned by
/// the surrounding engine/catalog context and outlive all modules.
template <class F>
struct LambdaModule {
    const DoubleQuiver* dq = nullptr;
    F field;
    DimVector dims;
    std::vector<Matrix<F>> mats;  // indexed like dq->arrows

    int dim_at(int v) const { return dims[v]; }
    int total_dim() const { return height(dims); }
};

using QModule = LambdaModule<RatField>;
using PModule = LambdaModule<PrimeField>;

template <class F>
LambdaModule<F> make_zero_module(const DoubleQuiver& dq, F field, const DimVector& dims) {
    LambdaModule<F> m;
    m.dq = &dq;
    m.field = field;
    m.dims = dims;
    for (const auto& a : dq.arrows)
        m.mats.push_back(Matrix<F>(field, dims[a.tgt], dims[a.src]));
    return m;
}

template <class F>
LambdaModule<F> make_simple(const DoubleQuiver& dq, F field, int i) {
    DimVector d(dq.num_vertices(), 0);
    d[i] = 1;
    return make_zero_module(dq, field, d);
}

template <class F>
LambdaModule<F> direct_sum(const LambdaModule<F>& x, const LambdaModule<F>& y) {
    LambdaModule<F> m;
    m.dq = x.dq;
    m.field = x.field;
    m.dims.resize(x.dims.size());
    for (size_t v = 0; v < x.dims.size(); ++v) m.dims[v] = x.dims[v] + y.dims[v];
    for (size_t a = 0; a < x.mats.size(); ++a)
        m.mats.push_back(Matrix<F>::direct_sum(x.mats[a], y.mats[a]));
    return m;
}

template <class F>
LambdaModule<F> add_simple(const LambdaModule<F>& x, int i) {
    return direct_sum(x, make_simple(*x.dq, x.field, i));
}

/// The preprojective relation at vertex v, as a map V_v -> V_v.
template <class F>
Matrix<F> relation_at(const LambdaModule<F>& x, int v) {
    Matrix<F> r(x.field, x.dims[v], x.dims[v]);
    for (int a = 0; a < x.dq->num_arrows(); ++a) {
        const auto& ar = x.dq->arrow(a);
        if (ar.tgt != v) continue;
        Matrix<F> term = x.mats[a] * x.mats[ar.mate];
        r = (ar.sign > 0) ? r + term : r - term;
    }
    return r;
}

namespace detail {

/// Columns of m that form a basis of its column space.
template <class F>
Matrix<F> column_space_basis(const Matrix<F>& m) {
    Matrix<F> c = m;
    std::vector<int> pivots = c.rref();
    return m.columns(pivots);
}

}  // namespace detail

/// Per-vertex generators of rad(x): the images of all arrow maps.
template <class F>
std::vector<Matrix<F>> radical_subspaces(const LambdaModule<F>& x) {
    std::vector<Matrix<F>> out;
    for (int v = 0; v < x.dq->num_vertices(); ++v) {
        Matrix<F> gen(x.field, x.dims[v], 0);
        for (int a = 0; a < x.dq->num_arrows(); ++a)
            if (x.dq->arrow(a).tgt == v) gen = gen.hstack(x.mats[a]);
        out.push_back(detail::column_space_basis(gen));
    }
    return out;
}

/// Dimensions along V >= rad V >= rad^2 V >= ..., last entry 0 when
/// nilpotent. Throws NotNilpotent when the chain stalls above zero.
template <class F>
std::vector<DimVector> radical_series(const LambdaModule<F>& x) {
    std::vector<DimVector> series;
    std::vector<Matrix<F>> cur;
    for (int v = 0; v < x.dq->num_vertices(); ++v)
        cur.push_back(Matrix<F>::identity(x.field, x.dims[v]));
    series.push_back(x.dims);
    while (true) {
        std::vector<Matrix<F>> next;
        DimVector d(x.dq->num_vertices(), 0);
        for (int v = 0; v < x.dq->num_vertices(); ++v) {
            Matrix<F> gen(x.field, x.dims[v], 0);
            for (int a = 0; a < x.dq->num_arrows(); ++a)
                if (x.dq->arrow(a).tgt == v)
                    gen = gen.hstack(x.mats[a] * cur[x.dq->arrow(a).src]);
            next.push_back(detail::column_space_basis(gen));
            d[v] = next.back().cols();
        }
        if (height(d) == 0) {
            series.push_back(d);
            return series;
        }
        if (d == series.back())
            throw NotNilpotent("radical series stalls at dimension " +
                               std::to_string(height(d)));
        series.push_back(d);
        cur = std::move(next);
    }
}

template <class F>
bool is_nilpotent(const LambdaModule<F>& x) {
    try {
        radical_series(x);
        return true;
    } catch (const NotNilpotent&) {
        return false;
    }
}

template <class F>
void validate(const LambdaModule<F>& x) {
    for (int v = 0; v < x.dq->num_vertices(); ++v)
        if (!relation_at(x, v).is_zero())
            throw RelationViolated("preprojective relation fails at vertex " +
                                   std::to_string(v));
    radical_series(x);  // throws NotNilpotent on failure
}

/// socle_i = dim of the largest submodule part at i killed by all arrows
/// leaving i; equals hom_dim(s_i, x).
template <class F>
DimVector socle_dims(const LambdaModule<F>& x) {
    DimVector s(x.dq->num_vertices(), 0);
    for (int v = 0; v < x.dq->num_vertices(); ++v) {
        Matrix<F> stack(x.field, 0, x.dims[v]);
        for (int a = 0; a < x.dq->num_arrows(); ++a)
            if (x.dq->arrow(a).src == v) stack = stack.vstack(x.mats[a]);
        s[v] = x.dims[v] - stack.rank();
    }
    return s;
}

/// head_i = dim coker of the combined images of arrows into i; equals
/// hom_dim(x, s_i) = epsilon_i(x).
template <class F>
DimVector head_dims(const LambdaModule<F>& x) {
    DimVector h(x.dq->num_vertices(), 0);
    std::vector<Matrix<F>> rad = radical_subspaces(x);
    for (int v = 0; v < x.dq->num_vertices(); ++v) h[v] = x.dims[v] - rad[v].cols();
    return h;
}

template <class F>
int epsilon(const LambdaModule<F>& x, int i) {
    return head_dims(x)[i];
}

/// Basis of Hom(x, y): each element is one matrix per vertex intertwining
/// every arrow map.
template <class F>
std::vector<std::vector<Matrix<F>>> hom_basis(const LambdaModule<F>& x,
                                              const LambdaModule<F>& y) {
    const F& field = x.field;
    int nv = x.dq->num_vertices();
    // unknown layout: phi_v is dims_y[v] x dims_x[v], flattened row-major
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    int nunk = offset[nv];
    int neq = 0;
    for (int a = 0; a < x.dq->num_arrows(); ++a)
        neq += y.dims[x.dq->arrow(a).tgt] * x.dims[x.dq->arrow(a).src];
    Matrix<F> sys(field, neq, nunk);
    int row = 0;
    for (int a = 0; a < x.dq->num_arrows(); ++a) {
        const auto& ar = x.dq->arrow(a);
        // phi_tgt * X_a - Y_a * phi_src = 0
        for (int r = 0; r < y.dims[ar.tgt]; ++r)
            for (int c = 0; c < x.dims[ar.src]; ++c) {
                for (int k = 0; k < x.dims[ar.tgt]; ++k)
                    sys.at(row, offset[ar.tgt] + r * x.dims[ar.tgt] + k) =
                        field.add(sys.at(row, offset[ar.tgt] + r * x.dims[ar.tgt] + k),
                                  x.mats[a].at(k, c));
                for (int k = 0; k < y.dims[ar.src]; ++k)
                    sys.at(row, offset[ar.src] + k * x.dims[ar.src] + c) =
                        field.sub(sys.at(row, offset[ar.src] + k * x.dims[ar.src] + c),
                                  y.mats[a].at(r, k));
                ++row;
            }
    }
    Matrix<F> ker = sys.kernel_basis();
    std::vector<std::vector<Matrix<F>>> basis;
    for (int j = 0; j < ker.cols(); ++j) {
        std::vector<Matrix<F>> phi;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> m(field, y.dims[v], x.dims[v]);
            for (int r = 0; r < y.dims[v]; ++r)
                for (int c = 0; c < x.dims[v]; ++c)
                    m.at(r, c) = ker.at(offset[v] + r * x.dims[v] + c, j);
            phi.push_back(m);
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

template <class F>
int hom_dim(const LambdaModule<F>& x, const LambdaModule<F>& y) {
    return static_cast<int>(hom_basis(x, y).size());
}

/// dim Ext^1 via the preprojective dimension formula
/// hom(x,y) + hom(y,x) - (dim x ; dim y).
template <class F>
int ext1_dim(const CartanMatrix& cartan, const LambdaModule<F>& x,
             const LambdaModule<F>& y) {
    return hom_dim(x, y) + hom_dim(y, x) - sym_form(cartan, x.dims, y.dims);
}

/// Restriction of x to an arrow-stable family of subspaces (one matrix of
/// independent columns per vertex). Returns the submodule in the subspace
/// coordinates. Throws NotStable if some arrow leaves the family.
template <class F>
LambdaModule<F> restrict_to_submodule(const LambdaModule<F>& x,
                                      const std::vector<Matrix<F>>& subs) {
    LambdaModule<F> m;
    m.dq = x.dq;
    m.field = x.field;
    m.dims.resize(x.dims.size());
    for (size_t v = 0; v < subs.size(); ++v) m.dims[v] = subs[v].cols();
    for (int a = 0; a < x.dq->num_arrows(); ++a) {
        const auto& ar = x.dq->arrow(a);
        Matrix<F> img = x.mats[a] * subs[ar.src];
        Matrix<F> induced(x.field, subs[ar.tgt].cols(), subs[ar.src].cols());
        for (int c = 0; c < img.cols(); ++c) {
            std::vector<typename F::Elem> col;
            for (int r = 0; r < img.rows(); ++r) col.push_back(img.at(r, c));
            auto sol = subs[ar.tgt].solve(col);
            if (!sol)
                throw NotStable("subspace not stable under arrow " + ar.name);
            for (int r = 0; r < induced.rows(); ++r) induced.at(r, c) = (*sol)[r];
        }
        m.mats.push_back(std::move(induced));
    }
    return m;
}

template <class F>
struct QuotientResult {
    LambdaModule<F> module;
    std::vector<Matrix<F>> projections;  // per vertex, quotient-dim x dim
};

/// Quotient of x by an arrow-stable family of subspaces.
template <class F>
QuotientResult<F> quotient(const LambdaModule<F>& x, const std::vector<Matrix<F>>& subs) {
    const F& field = x.field;
    int nv = x.dq->num_vertices();
    // stability check up front, for a clean error
    restrict_to_submodule(x, subs);
    std::vector<Matrix<F>> proj(nv, Matrix<F>());
    for (int v = 0; v < nv; ++v) {
        int k = subs[v].cols();
        if (k == 0) {
            proj[v] = Matrix<F>::identity(field, x.dims[v]);
            continue;
        }
        auto [full, added] = complete_basis(subs[v]);
        Matrix<F> inv = *full.inverse();
        Matrix<F> p(field, x.dims[v] - k, x.dims[v]);
        for (int r = 0; r < p.rows(); ++r)
            for (int c = 0; c < x.dims[v]; ++c) p.at(r, c) = inv.at(k + r, c);
        proj[v] = p;
    }
    QuotientResult<F> q;
    q.module.dq = x.dq;
    q.module.field = field;
    q.module.dims.resize(nv);
    for (int v = 0; v < nv; ++v) q.module.dims[v] = proj[v].rows();
    for (int a = 0; a < x.dq->num_arrows(); ++a) {
        const auto& ar = x.dq->arrow(a);
        // induced map: pick any preimage section; proj * X_a * section
        // section for vertex v: right inverse of proj[v] (unit columns of the
        // completed basis); equivalently solve proj * s = id columnwise.
        Matrix<F> section(field, x.dims[ar.src], proj[ar.src].rows());
        for (int c = 0; c < section.cols(); ++c) {
            std::vector<typename F::Elem> unit(proj[ar.src].rows(), field.zero());
            unit[c] = field.one();
            auto sol = proj[ar.src].solve(unit);
            for (int r = 0; r < section.rows(); ++r) section.at(r, c) = (*sol)[r];
        }
        q.module.mats.push_back(proj[ar.tgt] * (x.mats[a] * section));
    }
    q.projections = std::move(proj);
    return q;
}

/// Cheap isomorphism invariants: dims, per-arrow ranks, radical filtration,
/// socle, head. Equal signatures are necessary (not sufficient) for iso.
template <class F>
std::vector<int> invariant_signature(const LambdaModule<F>& x) {
    std::vector<int> sig = x.dims;
    for (const auto& m : x.mats) sig.push_back(m.rank());
    for (const DimVector& d : radical_series(x))
        sig.insert(sig.end(), d.begin(), d.end());
    sig.push_back(-1);
    DimVector s = socle_dims(x);
    sig.insert(sig.end(), s.begin(), s.end());
    DimVector h = head_dims(x);
    sig.insert(sig.end(), h.begin(), h.end());
    return sig;
}

namespace detail {

template <class F>
bool combo_invertible(const std::vector<std::vector<Matrix<F>>>& basis,
                      const std::vector<typename F::Elem>& coeff, const F& field) {
    int nv = static_cast<int>(basis[0].size());
    for (int v = 0; v < nv; ++v) {
        Matrix<F> m = basis[0][v].scaled(coeff[0]);
        for (size_t k = 1; k < basis.size(); ++k)
            m = m + basis[k][v].scaled(coeff[k]);
        if (m.rows() != m.cols() || !m.is_invertible()) return false;
    }
    return true;
}

}  // namespace detail

/// Decide x ~= y by explicit search for an invertible intertwiner.
///
/// Over a finite field the search is exhaustive whenever p^d is small enough,
/// so the answer is definitive; above the budget it throws. Over the
/// rationals an iso, when present, is found by the randomized sweep with
/// overwhelming probability (invertible combinations are Zariski-dense in
/// Hom when x ~= y).
template <class F>
bool is_isomorphic(const LambdaModule<F>& x, const LambdaModule<F>& y) {
    if (x.dims != y.dims) return false;
    if (invariant_signature(x) != invariant_signature(y)) return false;
    auto basis = hom_basis(x, y);
    size_t d = basis.size();
    if (d == 0) return x.total_dim() == 0;
    if (static_cast<size_t>(hom_dim(x, x)) != d ||
        static_cast<size_t>(hom_dim(y, y)) != d)
        return false;
    const F& field = x.field;
    // single basis elements first
    for (size_t k = 0; k < d; ++k) {
        std::vector<typename F::Elem> coeff(d, field.zero());
        coeff[k] = field.one();
        if (detail::combo_invertible(basis, coeff, field)) return true;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    if constexpr (std::is_same_v<F, PrimeField>) {
        // randomized, then exhaustive when feasible
        for (int t = 0; t < 256; ++t) {
            std::vector<typename F::Elem> coeff(d);
            for (auto& c : coeff) c = static_cast<typename F::Elem>(rng() % field.p);
            if (detail::combo_invertible(basis, coeff, field)) return true;
        }
        double total = 1;
        for (size_t k = 0; k < d; ++k) total *= field.p;
        if (total <= (1 << 21)) {
            std::vector<typename F::Elem> coeff(d, 0);
            while (true) {
                if (detail::combo_invertible(basis, coeff, field)) return true;
                size_t k = 0;
                while (k < d && coeff[k] == field.p - 1) coeff[k++] = 0;
                if (k == d) break;
                ++coeff[k];
            }
            return false;
        }
        throw ClassMatchFailure("isomorphism search budget exceeded (hom dim " +
                                std::to_string(d) + " over F_" +
                                std::to_string(field.p) + ")");
    } else {
        for (int t = 0; t < 512; ++t) {
            std::vector<typename F::Elem> coeff(d);
            for (auto& c : coeff) c = field.from_int(long(rng() % 19) - 9);
            if (detail::combo_invertible(basis, coeff, field)) return true;
        }
        return false;
    }
}

/// Reduce an integer-entried rational module mod p. Throws FieldMismatch if
/// some denominator is divisible by p.
inline PModule reduce_mod_p(const QModule& x, const PrimeField& fp) {
    PModule m;
    m.dq = x.dq;
    m.field = fp;
    m.dims = x.dims;
    for (const auto& qm : x.mats) {
        PMatrix pm(fp, qm.rows(), qm.cols());
        for (int r = 0; r < qm.rows(); ++r)
            for (int c = 0; c < qm.cols(); ++c) {
                const mpq_class& v = qm.at(r, c);
                mpz_class den = v.get_den();
                if (mpz_fdiv_ui(den.get_mpz_t(), fp.p) == 0)
                    throw FieldMismatch("denominator not invertible mod " +
                                        std::to_string(fp.p));
                unsigned long nr = mpz_fdiv_ui(mpz_class(v.get_num()).get_mpz_t(), fp.p);
                unsigned long dr = mpz_fdiv_ui(den.get_mpz_t(), fp.p);
                pm.at(r, c) = fp.div(static_cast<PrimeField::Elem>(nr),
                                     static_cast<PrimeField::Elem>(dr));
            }
        m.mats.push_back(std::move(pm));
    }
    return m;
}

}  // namespace ppv
