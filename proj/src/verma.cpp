#include "ppv/verma.hpp"

#include <algorithm>

#include "ppv/root_datum.hpp"

namespace ppv {

namespace {

Weight add_weights(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

mpq_class abs_q(const mpq_class& v) { return v < 0 ? mpq_class(-v) : v; }

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// accumulate coefficient * sum into a class -> coefficient map
void add_into(std::map<int, mpq_class>& acc, const DeltaSum& d, const mpq_class& c) {
    for (const auto& [id, v] : d.terms) acc[id] += mpq_class(c * v);
}

}  // namespace

VermaEngine::VermaEngine(HallEngine& hall, Weight lambda)
    : hall_(&hall),
      lambda_(std::move(lambda)),
      cartan_(build_cartan(hall.catalog().quiver().graph)) {
    if (static_cast<int>(lambda_.size()) != cartan_.n)
        throw ConfigError("lambda length differs from the number of vertices");
}

DeltaSum VermaEngine::normalized(DimVector beta, std::map<int, mpq_class> acc) const {
    DeltaSum d{std::move(beta), {}};
    for (auto& [id, c] : acc)
        if (c != 0) d.terms.push_back({id, std::move(c)});
    return d;
}

DeltaSum VermaEngine::delta(int class_id) const {
    return {catalog().classes()[class_id].beta, {{class_id, 1}}};
}

DeltaSum VermaEngine::delta_zero() const {
    return delta(catalog().class_of_parts({}));
}

DeltaSum VermaEngine::e_star(int i, const DeltaSum& d) {
    DimVector beta = d.beta;
    beta[i] -= 1;
    std::map<int, mpq_class> acc;
    for (const auto& [x, c] : d.terms)
        for (const Stratum& s : hall_->grass().down(x, i)) acc[s.class_id] += c * s.chi;
    return normalized(std::move(beta), std::move(acc));
}

DeltaSum VermaEngine::f_star(int i, const DeltaSum& d, const Weight& nu_extra) {
    DimVector beta = d.beta;
    beta[i] += 1;
    std::map<int, mpq_class> acc;
    for (const auto& [x, c] : d.terms) {
        Weight nu = choose_nu(catalog().classes()[x].rep, lambda_);
        if (!nu_extra.empty()) nu = add_weights(nu, nu_extra);
        for (const Stratum& s : hall_->grass().up(x, nu, i)) acc[s.class_id] += c * s.chi;
        int corr = nu[i] - lambda_[i];
        if (corr != 0) acc[catalog().class_add_simple(x, i)] -= mpq_class(c * corr);
    }
    return normalized(std::move(beta), std::move(acc));
}

DeltaSum VermaEngine::h_star(int i, const DeltaSum& d) const {
    int scale = weight_pairing(cartan_, lambda_, d.beta, i);
    std::map<int, mpq_class> acc;
    for (const auto& [x, c] : d.terms) acc[x] = mpq_class(c * scale);
    return normalized(d.beta, std::move(acc));
}

std::vector<mpq_class> VermaEngine::eval_vector(const DeltaSum& d) {
    for (int b : d.beta)
        if (b < 0) return {};
    size_t len = words_of_content(d.beta).size();
    std::vector<mpq_class> v(len, 0);
    for (const auto& [x, c] : d.terms) {
        std::vector<mpq_class> dx = hall_->eval_delta_vector(x);
        for (size_t k = 0; k < len; ++k) v[k] += mpq_class(c * dx[k]);
    }
    return v;
}

mpq_class VermaEngine::pair(const DeltaSum& d, const MElem& f) {
    if (d.beta != f.beta) throw DimMismatch("pairing needs matching slices");
    mpq_class v = 0;
    for (const auto& [x, c] : d.terms) v += mpq_class(c * hall_->eval_elem(f, x));
    return v;
}

MElem VermaEngine::primal_F(int i, const MElem& f) {
    DimVector gamma = f.beta;
    gamma[i] += 1;
    const auto& wb = hall_->word_basis(f.beta);
    const std::vector<int>& cls = catalog().classes_of(gamma);
    std::vector<mpq_class> values;
    for (int c : cls) {
        mpq_class v = 0;
        for (size_t k = 0; k < wb.words.size(); ++k) {
            Word w = wb.words[k];
            w.insert(w.begin(), i);
            v += mpq_class(f.coeffs[k] * hall_->eval_word(w, c));
        }
        values.push_back(std::move(v));
    }
    return hall_->elem_from_values(gamma, values);
}

MElem VermaEngine::primal_E(int i, const MElem& f, const Weight& nu_extra) {
    if (f.beta.at(i) == 0)
        throw DimMismatch("slice has no alpha_i component to lower");
    DimVector gamma = f.beta;
    gamma[i] -= 1;
    const std::vector<int>& cls = catalog().classes_of(gamma);
    std::vector<mpq_class> values;
    for (int x : cls) {
        Weight nu = choose_nu(catalog().classes()[x].rep, lambda_);
        if (!nu_extra.empty()) nu = add_weights(nu, nu_extra);
        mpq_class v = 0;
        for (const Stratum& s : hall_->grass().up(x, nu, i))
            v += mpq_class(mpq_class(s.chi) * hall_->eval_elem(f, s.class_id));
        int corr = nu[i] - lambda_[i];
        if (corr != 0)
            v -= mpq_class(mpq_class(corr) *
                           hall_->eval_elem(f, catalog().class_add_simple(x, i)));
        values.push_back(std::move(v));
    }
    return hall_->elem_from_values(gamma, values);
}

MElem VermaEngine::primal_H(int i, const MElem& f) const {
    int scale = weight_pairing(cartan_, lambda_, f.beta, i);
    MElem r = f;
    for (auto& c : r.coeffs) c = mpq_class(c * scale);
    return r;
}

bool VermaEngine::is_embeddable(int class_id) const {
    DimVector a = socle_dims(catalog().classes()[class_id].rep);
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > lambda_[k]) return false;
    return true;
}

std::vector<int> VermaEngine::embeddable_classes(const DimVector& beta) const {
    std::vector<int> out;
    for (int c : catalog().classes_of(beta))
        if (is_embeddable(c)) out.push_back(c);
    return out;
}

std::vector<mpq_class> VermaEngine::restrict_r_lambda(const MElem& f) {
    if (!is_dominant(lambda_)) throw NotDominant("restriction needs dominant lambda");
    std::vector<mpq_class> out;
    for (int c : embeddable_classes(f.beta)) out.push_back(hall_->eval_elem(f, c));
    return out;
}

long VermaEngine::l_lambda_dim(const DimVector& beta) {
    if (!is_dominant(lambda_)) throw NotDominant("irreducible slice needs dominant lambda");
    std::vector<int> cls = embeddable_classes(beta);
    if (cls.empty()) return 0;
    size_t len = words_of_content(beta).size();
    RatField Q;
    QMatrix m(Q, static_cast<int>(cls.size()), static_cast<int>(len));
    for (size_t r = 0; r < cls.size(); ++r) {
        std::vector<mpq_class> v = hall_->eval_delta_vector(cls[r]);
        for (size_t c = 0; c < len; ++c) m.at(int(r), int(c)) = v[c];
    }
    return m.rank();
}

std::vector<CharacterRow> VermaEngine::character(int cutoff) {
    std::vector<CharacterRow> rows;
    std::vector<DimVector> slices;
    for (const auto& cl : catalog().classes())
        if (height(cl.beta) <= cutoff &&
            std::find(slices.begin(), slices.end(), cl.beta) == slices.end())
            slices.push_back(cl.beta);
    bool dom = is_dominant(lambda_);
    for (const DimVector& beta : slices) {
        CharacterRow row{beta, kostant_count(cartan_, beta), -1, -1};
        if (dom) {
            row.l_dim = l_lambda_dim(beta);
            row.freudenthal = freudenthal_mult(cartan_, lambda_, beta);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OperatorReport VermaEngine::integrability_check() {
    if (!is_dominant(lambda_)) throw NotDominant("integrability needs dominant lambda");
    OperatorReport rep{"integrability", DimVector(cartan_.n, 0), 0, {}};
    auto record = [&](const mpq_class& defect, const std::string& witness) {
        mpq_class a = abs_q(defect);
        if (a > rep.defect) rep.defect = a;
        if (a != 0 && rep.witnesses.size() < 5) rep.witnesses.push_back(witness);
    };
    DeltaSum d0 = delta_zero();
    for (int i = 0; i < cartan_.n; ++i) {
        // highest-weight laws
        for (const mpq_class& v : eval_vector(e_star(i, d0)))
            record(v, "e_star on the zero-module delta");
        {
            std::map<int, mpq_class> acc;
            add_into(acc, h_star(i, d0), 1);
            add_into(acc, d0, -lambda_[i]);
            for (auto& [id, v] : acc)
                record(v, "h_star eigenvalue at vertex " + std::to_string(i + 1));
        }
        // the defining generator of the maximal submodule dies as a functional
        DeltaSum d = d0;
        for (int k = 0; k <= lambda_[i]; ++k) d = f_star(i, d);
        for (const mpq_class& v : eval_vector(d))
            record(v, "(F*_" + std::to_string(i + 1) + ")^" +
                          std::to_string(lambda_[i] + 1) + " on the zero-module delta");
    }
    return rep;
}

std::vector<OperatorReport> VermaEngine::verify_relations(int cutoff) {
    const Catalog& cat = catalog();
    int n = cartan_.n;
    std::vector<DimVector> slices;
    for (const auto& cl : cat.classes())
        if (height(cl.beta) <= cutoff &&
            std::find(slices.begin(), slices.end(), cl.beta) == slices.end())
            slices.push_back(cl.beta);

    std::vector<OperatorReport> out;
    auto slice_tag = [](const DimVector& b) {
        std::string s = "(";
        for (size_t k = 0; k < b.size(); ++k)
            s += (k ? "," : "") + std::to_string(b[k]);
        return s + ")";
    };

    // raising by one simple stays within the catalog
    auto can_raise = [&](const DimVector& beta, int extra_height) {
        return height(beta) + extra_height <= cat.cutoff() &&
               height(beta) + extra_height <= cutoff;
    };
    // E_i on elements, extended by zero to empty slices
    auto pe = [&](int i, const MElem& f) -> MElem {
        if (f.beta[i] == 0) {
            DimVector g = f.beta;
            g[i] -= 1;
            return {g, {}};
        }
        return primal_E(i, f);
    };
    auto elem_combine = [&](std::vector<std::pair<mpq_class, MElem>> terms) {
        // all non-empty terms share a slice; empty (zero) terms are skipped
        MElem r{{}, {}};
        for (auto& [c, t] : terms) {
            if (r.beta.empty()) {
                r.beta = t.beta;
                r.coeffs.assign(t.coeffs.empty() && !t.beta.empty()
                                    ? 0
                                    : t.coeffs.size(),
                                0);
            }
            if (t.coeffs.empty()) continue;
            if (r.coeffs.size() < t.coeffs.size()) r.coeffs.resize(t.coeffs.size(), 0);
            for (size_t k = 0; k < t.coeffs.size(); ++k)
                r.coeffs[k] += mpq_class(c * t.coeffs[k]);
        }
        return r;
    };

    for (const DimVector& beta : slices) {
        const std::vector<int>& cls = cat.classes_of(beta);
        const auto& wb = hall_->word_basis(beta);
        std::vector<MElem> basis;
        for (int k = 0; k < wb.rank; ++k) {
            std::vector<mpq_class> c(wb.rank, 0);
            c[size_t(k)] = 1;
            basis.push_back({beta, std::move(c)});
        }

        auto report = [&](const std::string& name) {
            return OperatorReport{name, beta, 0, {}};
        };
        auto record = [&](OperatorReport& rep, const mpq_class& defect,
                          const std::string& witness) {
            mpq_class a = abs_q(defect);
            if (a > rep.defect) rep.defect = a;
            if (a != 0 && rep.witnesses.size() < 5) rep.witnesses.push_back(witness);
        };
        auto record_vec = [&](OperatorReport& rep, const std::vector<mpq_class>& v,
                              const std::string& witness) {
            for (const mpq_class& e : v) record(rep, e, witness);
        };

        // (a) + (b): dual commutators and H brackets
        OperatorReport rep_comm = report("dual_commutator");
        OperatorReport rep_h = report("dual_h_brackets");
        for (int x : cls) {
            DeltaSum d = delta(x);
            std::string wx = "delta(" + cat.classes()[x].name + ") at " + slice_tag(beta);
            for (int i = 0; i < n; ++i) {
                // [H_i, E_j] = a_ij E_j
                for (int j = 0; j < n; ++j) {
                    DeltaSum ej = e_star(j, d);
                    std::map<int, mpq_class> acc;
                    add_into(acc, h_star(i, ej), 1);
                    add_into(acc, e_star(j, h_star(i, d)), -1);
                    add_into(acc, ej, -cartan_.at(i, j));
                    record_vec(rep_h,
                               eval_vector(normalized(ej.beta, std::move(acc))),
                               "[H*,E*] on " + wx);
                }
                if (!can_raise(beta, 1)) continue;
                for (int j = 0; j < n; ++j) {
                    // [E_i, F_j] = delta_ij H_i
                    DeltaSum fj = f_star(j, d);
                    std::map<int, mpq_class> acc;
                    add_into(acc, e_star(i, fj), 1);
                    add_into(acc, f_star(j, e_star(i, d)), -1);
                    if (i == j) add_into(acc, h_star(i, d), -1);
                    DimVector target = beta;
                    target[j] += 1;
                    target[i] -= 1;
                    record_vec(rep_comm,
                               eval_vector(normalized(target, std::move(acc))),
                               "[E*,F*] on " + wx);
                    // [H_i, F_j] = -a_ij F_j
                    std::map<int, mpq_class> acc2;
                    add_into(acc2, h_star(i, fj), 1);
                    add_into(acc2, f_star(j, h_star(i, d)), -1);
                    add_into(acc2, fj, cartan_.at(i, j));
                    record_vec(rep_h,
                               eval_vector(normalized(fj.beta, std::move(acc2))),
                               "[H*,F*] on " + wx);
                }
            }
        }
        out.push_back(std::move(rep_comm));
        out.push_back(std::move(rep_h));

        // (c): dual Serre relations
        OperatorReport rep_se = report("dual_serre_e");
        OperatorReport rep_sf = report("dual_serre_f");
        for (int x : cls) {
            DeltaSum d = delta(x);
            std::string wx = "delta(" + cat.classes()[x].name + ") at " + slice_tag(beta);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    int steps = 1 - cartan_.at(i, j);
                    // E side always stays inside the catalog
                    {
                        DimVector target = beta;
                        target[i] -= 1;
                        target[j] -= steps;
                        std::map<int, mpq_class> acc;
                        bool any = false;
                        for (int p = 0; p <= steps; ++p) {
                            DeltaSum t = d;
                            for (int k = 0; k < steps - p; ++k) t = e_star(j, t);
                            t = e_star(i, t);
                            for (int k = 0; k < p; ++k) t = e_star(j, t);
                            mpq_class coeff(p % 2 == 0 ? 1 : -1);
                            coeff /= mpq_class(factorial(p) * factorial(steps - p));
                            add_into(acc, t, coeff);
                            any = any || !t.terms.empty();
                        }
                        if (any)
                            record_vec(rep_se,
                                       eval_vector(normalized(target, std::move(acc))),
                                       "Serre E* (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") on " + wx);
                    }
                    if (can_raise(beta, steps + 1)) {
                        DimVector target = beta;
                        target[i] += 1;
                        target[j] += steps;
                        std::map<int, mpq_class> acc;
                        for (int p = 0; p <= steps; ++p) {
                            DeltaSum t = d;
                            for (int k = 0; k < steps - p; ++k) t = f_star(j, t);
                            t = f_star(i, t);
                            for (int k = 0; k < p; ++k) t = f_star(j, t);
                            mpq_class coeff(p % 2 == 0 ? 1 : -1);
                            coeff /= mpq_class(factorial(p) * factorial(steps - p));
                            add_into(acc, t, coeff);
                        }
                        record_vec(rep_sf,
                                   eval_vector(normalized(target, std::move(acc))),
                                   "Serre F* (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") on " + wx);
                    }
                }
        }
        out.push_back(std::move(rep_se));
        out.push_back(std::move(rep_sf));

        // (d): primal families on the word basis
        OperatorReport rep_pc = report("primal_commutator");
        OperatorReport rep_ph = report("primal_h_brackets");
        OperatorReport rep_pse = report("primal_serre_e");
        OperatorReport rep_psf = report("primal_serre_f");
        for (size_t bk = 0; bk < basis.size(); ++bk) {
            const MElem& f = basis[bk];
            std::string wf = "basis element " + std::to_string(bk) + " at " + slice_tag(beta);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    // [H_i, E_j]
                    MElem ej = pe(j, f);
                    MElem lhs = elem_combine({{1, primal_H(i, ej)},
                                              {-1, pe(j, primal_H(i, f))},
                                              {-cartan_.at(i, j), ej}});
                    for (const mpq_class& v : lhs.coeffs) record(rep_ph, v, "[H,E] on " + wf);
                }
                if (!can_raise(beta, 1)) continue;
                for (int j = 0; j < n; ++j) {
                    MElem fj = primal_F(j, f);
                    MElem efj = pe(i, fj);
                    MElem ei = pe(i, f);
                    MElem fei = ei.coeffs.empty() ? MElem{beta, {}} : primal_F(j, ei);
                    std::vector<std::pair<mpq_class, MElem>> terms = {{1, efj}, {-1, fei}};
                    if (i == j) terms.push_back({-1, primal_H(i, f)});
                    MElem lhs = elem_combine(std::move(terms));
                    for (const mpq_class& v : lhs.coeffs)
                        record(rep_pc, v, "[E,F] on " + wf);
                    MElem lhs2 = elem_combine({{1, primal_H(i, fj)},
                                               {-1, primal_F(j, primal_H(i, f))},
                                               {cartan_.at(i, j), fj}});
                    for (const mpq_class& v : lhs2.coeffs)
                        record(rep_ph, v, "[H,F] on " + wf);
                }
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    int steps = 1 - cartan_.at(i, j);
                    {
                        std::vector<std::pair<mpq_class, MElem>> terms;
                        for (int p = 0; p <= steps; ++p) {
                            MElem t = f;
                            for (int k = 0; k < steps - p && !t.coeffs.empty(); ++k)
                                t = pe(j, t);
                            if (!t.coeffs.empty()) t = pe(i, t);
                            for (int k = 0; k < p && !t.coeffs.empty(); ++k) t = pe(j, t);
                            mpq_class coeff(p % 2 == 0 ? 1 : -1);
                            coeff /= mpq_class(factorial(p) * factorial(steps - p));
                            if (!t.coeffs.empty()) terms.push_back({coeff, t});
                        }
                        if (!terms.empty()) {
                            MElem lhs = elem_combine(std::move(terms));
                            for (const mpq_class& v : lhs.coeffs)
                                record(rep_pse, v, "Serre E on " + wf);
                        }
                    }
                    if (can_raise(beta, steps + 1)) {
                        std::vector<std::pair<mpq_class, MElem>> terms;
                        for (int p = 0; p <= steps; ++p) {
                            MElem t = f;
                            for (int k = 0; k < steps - p; ++k) t = primal_F(j, t);
                            t = primal_F(i, t);
                            for (int k = 0; k < p; ++k) t = primal_F(j, t);
                            mpq_class coeff(p % 2 == 0 ? 1 : -1);
                            coeff /= mpq_class(factorial(p) * factorial(steps - p));
                            terms.push_back({coeff, t});
                        }
                        MElem lhs = elem_combine(std::move(terms));
                        for (const mpq_class& v : lhs.coeffs)
                            record(rep_psf, v, "Serre F on " + wf);
                    }
                }
        }
        out.push_back(std::move(rep_pc));
        out.push_back(std::move(rep_ph));
        out.push_back(std::move(rep_pse));
        out.push_back(std::move(rep_psf));

        // (e): the duality pairing between the two realizations
        OperatorReport rep_pair = report("duality_pairing");
        for (int x : cls) {
            DeltaSum d = delta(x);
            std::string wx = "delta(" + cat.classes()[x].name + ") at " + slice_tag(beta);
            for (int i = 0; i < n; ++i) {
                if (beta[i] > 0) {
                    DimVector gamma = beta;
                    gamma[i] -= 1;
                    const auto& low = hall_->word_basis(gamma);
                    DeltaSum ed = e_star(i, d);
                    for (int k = 0; k < low.rank; ++k) {
                        std::vector<mpq_class> c(low.rank, 0);
                        c[size_t(k)] = 1;
                        MElem g{gamma, std::move(c)};
                        record(rep_pair, pair(ed, g) - pair(d, primal_F(i, g)),
                               "<E* d, g> vs <d, F g> on " + wx);
                    }
                }
                if (can_raise(beta, 1)) {
                    DimVector gamma = beta;
                    gamma[i] += 1;
                    const auto& high = hall_->word_basis(gamma);
                    DeltaSum fd = f_star(i, d);
                    for (int k = 0; k < high.rank; ++k) {
                        std::vector<mpq_class> c(high.rank, 0);
                        c[size_t(k)] = 1;
                        MElem g{gamma, std::move(c)};
                        record(rep_pair, pair(fd, g) - pair(d, primal_E(i, g)),
                               "<F* d, g> vs <d, E g> on " + wx);
                    }
                }
            }
        }
        out.push_back(std::move(rep_pair));
    }
    return out;
}

}  // namespace ppv
