#include "ppv/grassmann.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "ppv/pp_algebra.hpp"
#include "ppv/root_datum.hpp"

namespace ppv {

long chi_from_counts(const std::vector<std::pair<std::uint32_t, long>>& counts,
                     int degree_bound) {
    if (static_cast<int>(counts.size()) < degree_bound + 2)
        throw ConfigError("need at least " + std::to_string(degree_bound + 2) +
                          " primes for degree bound " + std::to_string(degree_bound));
    size_t n = counts.size() - 1;  // interpolate through the first n points
    auto lagrange_at = [&](const mpq_class& q) {
        mpq_class total = 0;
        for (size_t k = 0; k < n; ++k) {
            mpq_class term = counts[k].second;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                mpq_class num = q - mpq_class(counts[j].first);
                mpq_class den = mpq_class(counts[k].first) - mpq_class(counts[j].first);
                term = mpq_class(term * num / den);
            }
            total = mpq_class(total + term);
        }
        return total;
    };
    mpq_class held = lagrange_at(mpq_class(counts.back().first));
    if (held != counts.back().second)
        throw NonPolynomialCount("held-out prime " + std::to_string(counts.back().first) +
                                 " predicts " + held.get_str() + ", counted " +
                                 std::to_string(counts.back().second));
    mpq_class at_one = lagrange_at(1);
    if (at_one.get_den() != 1)
        throw NonPolynomialCount("interpolated value at 1 is not an integer: " +
                                 at_one.get_str());
    return at_one.get_num().get_si();
}

namespace {

long pow_l(long p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

/// number of n x r matrices over F_p whose rows span a fixed r-dimensional
/// space: surjections F_p^n -> F_p^r
long surjection_count(int n, int r, long p) {
    long c = 1;
    for (int j = 0; j < r; ++j) c *= pow_l(p, n) - pow_l(p, j);
    return c;
}

long projective_size(int n, long p) { return n == 0 ? 0 : (pow_l(p, n) - 1) / (p - 1); }

/// All r-dimensional subspaces of F_p^g as r x g reduced-echelon matrices.
std::vector<PMatrix> subspaces(int g, int r, const PrimeField& F) {
    std::vector<PMatrix> out;
    if (r == 0) {
        out.push_back(PMatrix(F, 0, g));
        return out;
    }
    if (r > g) return out;
    // choose pivot columns, then fill the free entries
    std::vector<int> piv(r);
    std::function<void(int, int)> choose = [&](int from, int k) {
        if (k == r) {
            std::vector<std::pair<int, int>> free_slots;  // (row, col)
            for (int row = 0; row < r; ++row)
                for (int col = piv[row] + 1; col < g; ++col) {
                    bool is_piv = false;
                    for (int t = 0; t < r; ++t)
                        if (piv[t] == col) is_piv = true;
                    if (!is_piv) free_slots.push_back({row, col});
                }
            std::vector<std::uint32_t> vals(free_slots.size(), 0);
            while (true) {
                PMatrix m(F, r, g);
                for (int row = 0; row < r; ++row) m.at(row, piv[row]) = 1;
                for (size_t s = 0; s < free_slots.size(); ++s)
                    m.at(free_slots[s].first, free_slots[s].second) = vals[s];
                out.push_back(std::move(m));
                size_t s = 0;
                while (s < vals.size() && vals[s] == F.p - 1) vals[s++] = 0;
                if (s == vals.size()) break;
                ++vals[s];
            }
            return;
        }
        for (int c = from; c < g; ++c) {
            piv[k] = c;
            choose(c + 1, k + 1);
        }
    };
    choose(0, 0);
    return out;
}

StratifiedSum aggregate(const std::vector<std::map<int, long>>& per_prime,
                        const std::vector<std::uint32_t>& primes, int degree_bound) {
    std::vector<int> ids;
    for (const auto& m : per_prime)
        for (const auto& [id, cnt] : m)
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    StratifiedSum out;
    for (int id : ids) {
        std::vector<std::pair<std::uint32_t, long>> counts;
        for (size_t k = 0; k < primes.size(); ++k) {
            auto it = per_prime[k].find(id);
            counts.push_back({primes[k], it == per_prime[k].end() ? 0 : it->second});
        }
        out.push_back({id, chi_from_counts(counts, degree_bound)});
    }
    return out;
}

const std::uint32_t kPrimePool[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

}  // namespace

GrassEngine::GrassEngine(const Catalog& cat, std::vector<std::uint32_t> primes)
    : cat_(&cat), primes_(std::move(primes)) {
    PathAlgebra alg = build_path_algebra(cat.quiver());
    for (int i = 0; i < cat.quiver().num_vertices(); ++i)
        inj_q_.push_back(injective_module(alg, i));
}

const std::vector<PModule>& GrassEngine::injectives_mod_p(std::uint32_t p) {
    auto& v = inj_p_[p];
    if (v.empty()) {
        PrimeField F(p);
        for (const QModule& q : inj_q_) v.push_back(reduce_mod_p(q, F));
    }
    return v;
}

const PModule& GrassEngine::rep_mod_p(int class_id, std::uint32_t p) {
    auto key = std::make_pair(class_id, p);
    auto it = rep_p_.find(key);
    if (it == rep_p_.end()) {
        PrimeField F(p);
        it = rep_p_.emplace(key, reduce_mod_p(cat_->classes()[class_id].rep, F)).first;
    }
    return it->second;
}

std::vector<std::uint32_t> GrassEngine::primes_for(int degree_bound) const {
    int need = degree_bound + 2;
    std::vector<std::uint32_t> ps(primes_);
    for (std::uint32_t p : kPrimePool) {
        if (static_cast<int>(ps.size()) >= need) break;
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    }
    if (static_cast<int>(ps.size()) < need)
        throw ConfigError("prime pool exhausted for degree bound " +
                          std::to_string(degree_bound));
    return ps;
}

GrassEngine::Groups GrassEngine::groups_of(int class_id) const {
    Groups g;
    const auto& parts = cat_->classes()[class_id].parts;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (!g.empty() && g.back().first == parts[k])
            ++g.back().second;
        else
            g.push_back({parts[k], 1});
    }
    return g;
}

const StratifiedSum& GrassEngine::down(int class_id, int i) {
    auto key = std::make_pair(class_id, i);
    auto hit = down_cache_.find(key);
    if (hit != down_cache_.end()) return hit->second;

    const DoubleQuiver& dq = cat_->quiver();
    int nv = dq.num_vertices();
    const Catalog::Class& cls = cat_->classes()[class_id];
    int eps = epsilon(cls.rep, i);
    Groups groups = groups_of(class_id);
    std::vector<std::uint32_t> primes = primes_for(eps > 0 ? eps - 1 : 0);

    std::vector<std::map<int, long>> per_prime(primes.size());
    for (size_t pk = 0; pk < primes.size() && eps > 0; ++pk) {
        std::uint32_t p = primes[pk];
        PrimeField F(p);
        const PModule& x = rep_mod_p(class_id, p);
        // per indec type: functionals on its vertex-i space vanishing on the
        // incoming arrow images (the dual of the head at i)
        std::vector<PMatrix> ann;  // columns = functional coordinates
        std::vector<int> hdim;
        for (auto [t, n] : groups) {
            const PModule& m = cat_->indec_mod_p(t, p);
            PMatrix incoming(F, m.dims[i], 0);
            for (int a = 0; a < dq.num_arrows(); ++a)
                if (dq.arrow(a).tgt == i) incoming = incoming.hstack(m.mats[a]);
            ann.push_back(incoming.transpose().kernel_basis());
            hdim.push_back(ann.back().cols());
        }
        // per-type block offsets of x_i in the canonical direct-sum layout
        std::vector<int> offset;  // start of each summand copy at vertex i
        {
            int off = 0;
            for (auto [t, n] : groups)
                for (int c = 0; c < n; ++c) {
                    offset.push_back(off);
                    off += cat_->indecomposables()[t].rep.dims[i];
                }
            assert(off == x.dims[i]);
        }
        // enumerate row-space tuples (V_t)
        std::vector<std::vector<PMatrix>> choices;
        for (size_t t = 0; t < groups.size(); ++t) {
            std::vector<PMatrix> c;
            for (int r = 0; r <= std::min(groups[t].second, hdim[t]); ++r)
                for (PMatrix& s : subspaces(hdim[t], r, F)) c.push_back(std::move(s));
            choices.push_back(std::move(c));
        }
        long total = 0;
        std::vector<size_t> pick(groups.size(), 0);
        while (true) {
            bool all_zero = true;
            for (size_t t = 0; t < groups.size(); ++t)
                if (choices[t][pick[t]].rows() > 0) all_zero = false;
            if (!all_zero) {
                // representative functional: copy j of type t evaluates by the
                // j-th chosen basis functional (j < r_t), 0 otherwise
                PMatrix f(F, 1, x.dims[i]);
                int copy = 0;
                for (size_t t = 0; t < groups.size(); ++t) {
                    const PMatrix& V = choices[t][pick[t]];
                    for (int j = 0; j < groups[t].second; ++j, ++copy) {
                        if (j >= V.rows()) continue;
                        for (int d = 0; d < ann[t].rows(); ++d) {
                            PrimeField::Elem acc = 0;
                            for (int c = 0; c < ann[t].cols(); ++c)
                                acc = F.add(acc, F.mul(ann[t].at(d, c), V.at(j, c)));
                            f.at(0, offset[copy] + d) = acc;
                        }
                    }
                }
                std::vector<PMatrix> subs;
                for (int v = 0; v < nv; ++v)
                    subs.push_back(v == i ? f.kernel_basis() : PMatrix::identity(F, x.dims[v]));
                PModule y = restrict_to_submodule(x, subs);
                long orbit = 1;
                for (size_t t = 0; t < groups.size(); ++t)
                    orbit *= surjection_count(groups[t].second, choices[t][pick[t]].rows(), p);
                assert(orbit % (p - 1) == 0);
                orbit /= p - 1;
                per_prime[pk][cat_->classify(y)] += orbit;
                total += orbit;
            }
            size_t t = 0;
            while (t < pick.size() && pick[t] + 1 == choices[t].size()) pick[t++] = 0;
            if (t == pick.size()) break;
            ++pick[t];
        }
        if (total != projective_size(eps, p))
            throw ClassMatchFailure("hyperplane orbit counts do not cover the head space");
    }
    StratifiedSum sum = aggregate(per_prime, primes, eps > 0 ? eps - 1 : 0);
    long chi_total = 0;
    for (const Stratum& s : sum) chi_total += s.chi;
    if (chi_total != eps)
        throw ClassMatchFailure("grass_down strata do not add up to epsilon");
    return down_cache_.emplace(key, std::move(sum)).first->second;
}

const StratifiedSum& GrassEngine::up(int class_id, const Weight& nu, int i) {
    auto key = std::make_tuple(class_id, nu, i);
    auto hit = up_cache_.find(key);
    if (hit != up_cache_.end()) return hit->second;

    const DoubleQuiver& dq = cat_->quiver();
    const Catalog::Class& cls = cat_->classes()[class_id];
    DimVector a = socle_mults(cls.rep);
    if (a[i] > nu[i])
        throw NoEmbedding("socle multiplicity exceeds (nu;alpha_i) in grass_up");
    int kdim = nu[i] - a[i];  // extensions that split: lines from the ambient socle
    CartanMatrix cartan = build_cartan(dq.graph);
    int gdim = 0;  // dim Ext^1(s_i, x)
    Groups groups = groups_of(class_id);
    std::vector<int> gdims;
    {
        QModule si = make_simple(dq, RatField{}, i);
        for (auto [t, n] : groups) {
            int g = ext1_dim(cartan, si, cat_->indecomposables()[t].rep);
            gdims.push_back(g);
            gdim += n * g;
        }
    }
    int phi_dim = kdim + gdim;
    // the phi - epsilon law as an internal consistency check
    assert(phi_dim == epsilon(cls.rep, i) + weight_pairing(cartan, nu, cls.beta, i));

    std::vector<std::uint32_t> primes = primes_for(phi_dim > 0 ? phi_dim - 1 : 0);
    std::vector<std::map<int, long>> per_prime(primes.size());
    for (size_t pk = 0; pk < primes.size() && phi_dim > 0; ++pk) {
        std::uint32_t p = primes[pk];
        PrimeField F(p);
        const PModule& x = rep_mod_p(class_id, p);

        // arrows out of vertex i, the coordinates of an extension cocycle
        std::vector<int> out_arrows;
        for (int b = 0; b < dq.num_arrows(); ++b)
            if (dq.arrow(b).src == i) out_arrows.push_back(b);

        // per indec type: a basis of Ext^1(s_i, m_t) as explicit cocycles
        // (gamma_b in (m_t)_{tgt b}), a complement of the coboundaries inside
        // the solution space of the vertex-i relation
        std::vector<PMatrix> ext_basis;  // cols = cocycles, rows = stacked gamma
        std::vector<int> gamma_len;
        for (size_t tg = 0; tg < groups.size(); ++tg) {
            const PModule& m = cat_->indec_mod_p(groups[tg].first, p);
            int len = 0;
            for (int b : out_arrows) len += m.dims[dq.arrow(b).tgt];
            gamma_len.push_back(len);
            // cocycle condition: sum over b of sign(mate b) X_{mate b} gamma_b = 0
            PMatrix cond(F, m.dims[i], len);
            int col0 = 0;
            for (int b : out_arrows) {
                const auto& mate = dq.arrow(dq.arrow(b).mate);
                for (int r = 0; r < m.dims[i]; ++r)
                    for (int c = 0; c < m.dims[dq.arrow(b).tgt]; ++c) {
                        PrimeField::Elem e = m.mats[dq.arrow(b).mate].at(r, c);
                        cond.at(r, col0 + c) = mate.sign > 0 ? e : F.neg(e);
                    }
                col0 += m.dims[dq.arrow(b).tgt];
            }
            PMatrix cocycles = cond.kernel_basis();
            // coboundaries: gamma_b = X_b phi for phi in (m_t)_i
            PMatrix cob(F, len, m.dims[i]);
            col0 = 0;
            for (int b : out_arrows) {
                for (int r = 0; r < m.dims[dq.arrow(b).tgt]; ++r)
                    for (int c = 0; c < m.dims[i]; ++c)
                        cob.at(col0 + r, c) = m.mats[b].at(r, c);
                col0 += m.dims[dq.arrow(b).tgt];
            }
            // greedily extend the coboundary space by cocycle basis vectors
            PMatrix acc = cob;
            PMatrix basis(F, len, 0);
            for (int c = 0; c < cocycles.cols(); ++c) {
                PMatrix cand = acc.hstack(cocycles.columns({c}));
                if (cand.rank() > acc.rank()) {
                    acc = std::move(cand);
                    basis = basis.hstack(cocycles.columns({c}));
                }
            }
            if (basis.cols() != gdims[tg])
                throw ClassMatchFailure("cocycle space dimension disagrees with Ext^1");
            ext_basis.push_back(std::move(basis));
        }

        // enumerate row-space tuples (V_t) inside each Ext^1(s_i, m_t)
        std::vector<std::vector<PMatrix>> choices;
        for (size_t t = 0; t < groups.size(); ++t) {
            std::vector<PMatrix> c;
            for (int r = 0; r <= std::min(groups[t].second, gdims[t]); ++r)
                for (PMatrix& s : subspaces(gdims[t], r, F)) c.push_back(std::move(s));
            choices.push_back(std::move(c));
        }
        // copy offsets at every vertex for assembling block cocycles
        std::vector<std::vector<int>> off(dq.num_vertices());
        {
            DimVector run(dq.num_vertices(), 0);
            for (auto [t, n] : groups)
                for (int c = 0; c < n; ++c) {
                    for (int v = 0; v < dq.num_vertices(); ++v) {
                        off[v].push_back(run[v]);
                        run[v] += cat_->indecomposables()[t].rep.dims[v];
                    }
                }
            assert(run == x.dims);
        }

        long total = 0;
        std::vector<size_t> pick(groups.size(), 0);
        while (true) {
            bool all_zero = true;
            for (size_t t = 0; t < groups.size(); ++t)
                if (choices[t][pick[t]].rows() > 0) all_zero = false;
            long orbit;
            int yclass;
            if (all_zero) {
                orbit = projective_size(kdim, p);
                yclass = cat_->class_add_simple(class_id, i);
            } else {
                // middle term of the representative extension
                PModule y = make_zero_module(dq, F, x.dims);
                y.dims[i] += 1;
                for (int arr = 0; arr < dq.num_arrows(); ++arr) {
                    const auto& ar = dq.arrow(arr);
                    PMatrix m(F, y.dims[ar.tgt], y.dims[ar.src]);
                    for (int r = 0; r < x.dims[ar.tgt]; ++r)
                        for (int c = 0; c < x.dims[ar.src]; ++c)
                            m.at(r, c) = x.mats[arr].at(r, c);
                    y.mats[arr] = std::move(m);
                }
                int copy = 0;
                for (size_t t = 0; t < groups.size(); ++t) {
                    const PMatrix& V = choices[t][pick[t]];
                    for (int j = 0; j < groups[t].second; ++j, ++copy) {
                        if (j >= V.rows()) continue;
                        // cocycle = ext basis combination V(j,:)
                        std::vector<PrimeField::Elem> gamma(gamma_len[t], 0);
                        for (int c = 0; c < gdims[t]; ++c)
                            for (int r = 0; r < gamma_len[t]; ++r)
                                gamma[r] = F.add(gamma[r],
                                                 F.mul(ext_basis[t].at(r, c), V.at(j, c)));
                        int pos = 0;
                        for (int b : out_arrows) {
                            const auto& ar = dq.arrow(b);
                            int rows = cat_->indecomposables()[groups[t].first].rep.dims[ar.tgt];
                            for (int r = 0; r < rows; ++r)
                                y.mats[b].at(off[ar.tgt][copy] + r, y.dims[i] - 1) =
                                    gamma[pos + r];
                            pos += rows;
                        }
                    }
                }
                for (int v = 0; v < dq.num_vertices(); ++v)
                    assert(relation_at(y, v).is_zero());
                orbit = 1;
                for (size_t t = 0; t < groups.size(); ++t)
                    orbit *= surjection_count(groups[t].second, choices[t][pick[t]].rows(), p);
                assert(orbit % (p - 1) == 0);
                orbit = orbit / (p - 1) * pow_l(p, kdim);
                yclass = cat_->classify(y);
            }
            if (orbit > 0) {
                per_prime[pk][yclass] += orbit;
                total += orbit;
            }
            size_t t = 0;
            while (t < pick.size() && pick[t] + 1 == choices[t].size()) pick[t++] = 0;
            if (t == pick.size()) break;
            ++pick[t];
        }
        if (total != projective_size(phi_dim, p))
            throw ClassMatchFailure("extension orbit counts do not cover the socle space");
    }
    StratifiedSum sum = aggregate(per_prime, primes, phi_dim > 0 ? phi_dim - 1 : 0);
    long chi_total = 0;
    for (const Stratum& s : sum) chi_total += s.chi;
    if (chi_total != phi_dim)
        throw ClassMatchFailure("grass_up strata do not add up to phi");
    return up_cache_.emplace(key, std::move(sum)).first->second;
}

}  // namespace ppv
