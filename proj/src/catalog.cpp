#include "ppv/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <tuple>

#include "ppv/pp_algebra.hpp"

namespace ppv {

namespace {

// All dimension vectors of a given height (entries >= 0 summing to h).
void compositions(int nv, int h, DimVector& cur, int pos, std::vector<DimVector>& out) {
    if (pos == nv - 1) {
        cur[pos] = h;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= h; ++k) {
        cur[pos] = k;
        compositions(nv, h - k, cur, pos + 1, out);
    }
}

bool relations_hold(const PModule& x) {
    for (int v = 0; v < x.dq->num_vertices(); ++v)
        if (!relation_at(x, v).is_zero()) return false;
    return true;
}

// Visit every candidate matrix tuple for beta over F_p with the widest arrow
// held in rank normal form; calls fn on candidates passing relations and
// nilpotency. Returns false if fn asked to stop.
bool enumerate_candidates(const DoubleQuiver& dq, const DimVector& beta, std::uint32_t p,
                          const std::function<bool(const PModule&)>& fn) {
    PrimeField F(p);
    int na = dq.num_arrows();
    int amax = 0;
    long best = -1;
    for (int a = 0; a < na; ++a) {
        long e = static_cast<long>(beta[dq.arrow(a).tgt]) * beta[dq.arrow(a).src];
        if (e > best) {
            best = e;
            amax = a;
        }
    }
    // free entry slots: (arrow, row, col) for every arrow except amax
    struct Slot {
        int a, r, c;
    };
    std::vector<Slot> slots;
    for (int a = 0; a < na; ++a) {
        if (a == amax) continue;
        for (int r = 0; r < beta[dq.arrow(a).tgt]; ++r)
            for (int c = 0; c < beta[dq.arrow(a).src]; ++c) slots.push_back({a, r, c});
    }
    PModule x = make_zero_module(dq, F, beta);
    int rmax = std::min(beta[dq.arrow(amax).tgt], beta[dq.arrow(amax).src]);
    if (best == 0) rmax = 0;
    for (int rank = 0; rank <= rmax; ++rank) {
        for (auto& m : x.mats)
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.at(r, c) = 0;
        for (int k = 0; k < rank; ++k) x.mats[amax].at(k, k) = 1;
        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            if (relations_hold(x) && is_nilpotent(x))
                if (!fn(x)) return false;
            size_t k = 0;
            while (k < digits.size() && digits[k] == p - 1) {
                digits[k] = 0;
                x.mats[slots[k].a].at(slots[k].r, slots[k].c) = 0;
                ++k;
            }
            if (k == digits.size()) break;
            ++digits[k];
            x.mats[slots[k].a].at(slots[k].r, slots[k].c) = digits[k];
        }
    }
    return true;
}

// classify a candidate against the running class list
int match_class(const PModule& x, const std::vector<PModule>& reps,
                const std::vector<std::vector<int>>& sigs, const std::vector<int>& sig) {
    for (size_t k = 0; k < reps.size(); ++k)
        if (sigs[k] == sig && is_isomorphic(x, reps[k])) return static_cast<int>(k);
    return -1;
}

// Lift an F_2 representative to a rational module by assigning signs to its
// nonzero entries; empty optional when no assignment works.
std::optional<QModule> try_sign_lift(const DoubleQuiver& dq, const PModule& x) {
    RatField Q;
    std::vector<std::tuple<int, int, int>> ones;
    for (int a = 0; a < dq.num_arrows(); ++a)
        for (int r = 0; r < x.mats[a].rows(); ++r)
            for (int c = 0; c < x.mats[a].cols(); ++c)
                if (x.mats[a].at(r, c) != 0) ones.push_back({a, r, c});
    if (ones.size() > 20) return std::nullopt;  // budget; caller keeps searching
    QModule q = make_zero_module(dq, Q, x.dims);
    for (unsigned long mask = 0; mask < (1ul << ones.size()); ++mask) {
        for (size_t k = 0; k < ones.size(); ++k) {
            auto [a, r, c] = ones[k];
            q.mats[a].at(r, c) = (mask >> k) & 1 ? -1 : 1;
        }
        bool ok = true;
        for (int v = 0; v < dq.num_vertices() && ok; ++v)
            if (!relation_at(q, v).is_zero()) ok = false;
        if (ok && is_nilpotent(q)) return q;
    }
    return std::nullopt;
}

QModule lift_class(const DoubleQuiver& dq, const PModule& target) {
    // first try the stored representative, then walk the enumeration for
    // other members of the same orbit
    if (auto q = try_sign_lift(dq, target)) return *q;
    std::optional<QModule> found;
    enumerate_candidates(dq, target.dims, 2, [&](const PModule& cand) {
        if (!is_isomorphic(cand, target)) return true;
        if (auto q = try_sign_lift(dq, cand)) {
            found = *q;
            return false;
        }
        return true;
    });
    if (!found)
        throw LiftMismatch("no rational sign lift found for an F_2 class of dimension " +
                           std::to_string(height(target.dims)));
    return *found;
}

}  // namespace

std::vector<PModule> enumerate_classes_mod_p(const DoubleQuiver& dq, const DimVector& beta,
                                             std::uint32_t p) {
    std::vector<PModule> reps;
    std::vector<std::vector<int>> sigs;
    enumerate_candidates(dq, beta, p, [&](const PModule& x) {
        std::vector<int> sig = invariant_signature(x);
        if (match_class(x, reps, sigs, sig) < 0) {
            reps.push_back(x);
            sigs.push_back(std::move(sig));
        }
        return true;
    });
    return reps;
}

const std::vector<int>& Catalog::classes_of(const DimVector& beta) const {
    auto it = by_beta_.find(beta);
    if (it == by_beta_.end())
        throw CatalogMissing("no catalog slice for the requested dimension vector");
    return it->second;
}

bool Catalog::covers(const DimVector& beta) const { return by_beta_.count(beta) > 0; }

const PModule& Catalog::indec_mod_p(int id, std::uint32_t p) const {
    auto& cache = indec_cache_[p];
    // the catalog grows while it is being built; extend the cache lazily
    PrimeField F(p);
    while (cache.size() < indecs_.size())
        cache.push_back(reduce_mod_p(indecs_[cache.size()].rep, F));
    return cache[id];
}

template <class F>
std::vector<int> Catalog::fingerprint_of(const LambdaModule<F>& x) const {
    std::vector<int> fp = x.dims;
    for (size_t k = 0; k < indecs_.size(); ++k) {
        if constexpr (std::is_same_v<F, RatField>) {
            fp.push_back(hom_dim(indecs_[k].rep, x));
        } else {
            fp.push_back(hom_dim(indec_mod_p(static_cast<int>(k), x.field.p), x));
        }
    }
    return fp;
}

void Catalog::ensure_table(std::uint32_t tag) const {
    if (!frozen_)
        throw CatalogMissing("no fingerprint table for field tag " + std::to_string(tag));
    if (tables_.count(tag)) return;
    auto& table = tables_[tag];
    for (size_t cid = 0; cid < classes_.size(); ++cid) {
        std::vector<int> fp;
        if (tag == 0) {
            fp = fingerprint_of(classes_[cid].rep);
        } else {
            PrimeField Fp(tag);
            fp = fingerprint_of(reduce_mod_p(classes_[cid].rep, Fp));
        }
        auto [it, inserted] = table.emplace(std::move(fp), static_cast<int>(cid));
        if (!inserted)
            throw ClassMatchFailure("fingerprint collision over field tag " +
                                    std::to_string(tag));
    }
}

template <class F>
int Catalog::classify_impl(const LambdaModule<F>& x, std::uint32_t tag) const {
    if (!covers(x.dims))
        throw CatalogMissing("dimension vector beyond the catalog cutoff");
    ensure_table(tag);
    auto table = tables_.find(tag);
    std::vector<int> fp = fingerprint_of(x);
    auto hit = table->second.find(fp);
    if (hit == table->second.end())
        throw DecompositionFailed("module fingerprint matches no catalog class");
    return hit->second;
}

int Catalog::classify(const QModule& x) const { return classify_impl(x, 0); }
int Catalog::classify(const PModule& x) const { return classify_impl(x, x.field.p); }

bool Catalog::iso_test(const QModule& x, const QModule& y) const {
    if (x.dims != y.dims) return false;
    return classify(x) == classify(y);
}
bool Catalog::iso_test(const PModule& x, const PModule& y) const {
    if (x.dims != y.dims) return false;
    return classify(x) == classify(y);
}

int Catalog::class_of_parts(std::vector<int> parts) const {
    std::sort(parts.begin(), parts.end());
    auto it = parts_index_.find(parts);
    if (it == parts_index_.end())
        throw CatalogMissing("no catalog class with the requested decomposition");
    return it->second;
}

int Catalog::class_add_simple(int class_id, int i) const {
    // the simple at vertex i is an indecomposable with dim vector alpha_i
    int simple_id = -1;
    for (size_t k = 0; k < indecs_.size(); ++k) {
        if (height(indecs_[k].rep.dims) != 1 || indecs_[k].rep.dims[i] != 1) continue;
        simple_id = static_cast<int>(k);
        break;
    }
    assert(simple_id >= 0);
    std::vector<int> parts = classes_[class_id].parts;
    parts.push_back(simple_id);
    return class_of_parts(std::move(parts));
}

Catalog build_catalog(const DoubleQuiver& dq, int height_cutoff,
                      const std::vector<std::uint32_t>& fingerprint_primes,
                      bool crosscheck_f3) {
    Catalog cat;
    cat.dq_ = &dq;
    cat.cutoff_ = height_cutoff;
    int nv = dq.num_vertices();
    PrimeField F2(2);
    RatField Q;

    PathAlgebra alg = build_path_algebra(dq);
    std::vector<QModule> injectives;
    for (int i = 0; i < nv; ++i) injectives.push_back(injective_module(alg, i));
    int anon_counter = 1;

    // the zero module: the empty class at beta = 0
    {
        Catalog::Class zero;
        zero.beta = DimVector(nv, 0);
        zero.rep = make_zero_module(dq, Q, zero.beta);
        zero.name = "0";
        cat.parts_index_[{}] = 0;
        cat.by_beta_[zero.beta] = {0};
        cat.classes_.push_back(std::move(zero));
    }

    for (int h = 1; h <= height_cutoff; ++h) {
        std::vector<DimVector> betas;
        DimVector cur(nv, 0);
        compositions(nv, h, cur, 0, betas);
        for (const DimVector& beta : betas) {
            std::vector<PModule> reps = enumerate_classes_mod_p(dq, beta, 2);
            std::vector<std::vector<int>> sigs;
            for (const PModule& r : reps) sigs.push_back(invariant_signature(r));
            std::vector<std::vector<int>> match_parts(reps.size());
            std::vector<bool> matched(reps.size(), false);

            // multisets of existing indecomposables with total dimension beta
            std::vector<std::vector<int>> multisets;
            std::vector<int> pick;
            std::function<void(int, DimVector)> walk = [&](int from, DimVector rest) {
                if (height(rest) == 0) {
                    multisets.push_back(pick);
                    return;
                }
                for (int id = from; id < static_cast<int>(cat.indecs_.size()); ++id) {
                    const DimVector& d = cat.indecs_[id].rep.dims;
                    bool fits = true;
                    DimVector next = rest;
                    for (int v = 0; v < nv; ++v) {
                        next[v] -= d[v];
                        if (next[v] < 0) fits = false;
                    }
                    if (!fits) continue;
                    pick.push_back(id);
                    walk(id, next);
                    pick.pop_back();
                }
            };
            walk(0, beta);

            for (const std::vector<int>& parts : multisets) {
                PModule sum = make_zero_module(dq, F2, DimVector(nv, 0));
                for (int id : parts) sum = direct_sum(sum, cat.indec_mod_p(id, 2));
                int k = match_class(sum, reps, sigs, invariant_signature(sum));
                if (k < 0)
                    throw ClassMatchFailure(
                        "direct sum of catalog indecomposables missing from enumeration");
                if (matched[k])
                    throw ClassMatchFailure(
                        "two distinct decompositions match one enumerated class");
                matched[k] = true;
                match_parts[k] = parts;
            }

            for (size_t k = 0; k < reps.size(); ++k) {
                if (matched[k]) continue;
                // a new indecomposable
                Catalog::Indec ind;
                ind.rep = lift_class(dq, reps[k]);
                if (height(beta) == 1) {
                    for (int v = 0; v < nv; ++v)
                        if (beta[v] == 1) ind.name = "s" + std::to_string(v + 1);
                } else {
                    for (int v = 0; v < nv && ind.name.empty(); ++v)
                        if (injectives[v].dims == beta &&
                            is_isomorphic(ind.rep, injectives[v]))
                            ind.name = "q" + std::to_string(v + 1);
                    if (ind.name.empty()) ind.name = "m" + std::to_string(anon_counter++);
                }
                int id = static_cast<int>(cat.indecs_.size());
                // paranoia: the lift reduces back to the same F_2 class
                if (!is_isomorphic(reduce_mod_p(ind.rep, F2), reps[k]))
                    throw LiftMismatch("rational lift changes the F_2 class");
                cat.indecs_.push_back(std::move(ind));
                match_parts[k] = {id};
                matched[k] = true;
            }

            std::vector<int>& slice = cat.by_beta_[beta];
            for (size_t k = 0; k < reps.size(); ++k) {
                Catalog::Class cls;
                cls.beta = beta;
                cls.parts = match_parts[k];
                std::sort(cls.parts.begin(), cls.parts.end());
                cls.rep = make_zero_module(dq, Q, DimVector(nv, 0));
                for (int id : cls.parts) cls.rep = direct_sum(cls.rep, cat.indecs_[id].rep);
                std::vector<int> by_size = cls.parts;
                std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
                    int da = height(cat.indecs_[a].rep.dims);
                    int db = height(cat.indecs_[b].rep.dims);
                    if (da != db) return da > db;
                    return cat.indecs_[a].name < cat.indecs_[b].name;
                });
                for (int id : by_size) {
                    if (!cls.name.empty()) cls.name += "+";
                    cls.name += cat.indecs_[id].name;
                }
                int cid = static_cast<int>(cat.classes_.size());
                if (cat.parts_index_.count(cls.parts))
                    throw ClassMatchFailure("duplicate decomposition across classes");
                cat.parts_index_[cls.parts] = cid;
                slice.push_back(cid);
                cat.classes_.push_back(std::move(cls));
            }

            if (crosscheck_f3) {
                std::vector<PModule> reps3 = enumerate_classes_mod_p(dq, beta, 3);
                if (reps3.size() != reps.size())
                    throw LiftMismatch("class counts over F_2 and F_3 disagree at a slice");
            }
        }
    }

    // freeze: per-field fingerprint tables, validated injective
    cat.frozen_ = true;
    cat.ensure_table(0);
    for (std::uint32_t p : fingerprint_primes) cat.ensure_table(p);
    return cat;
}

}  // namespace ppv
