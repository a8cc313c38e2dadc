#include "ppv/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppv/errors.hpp"

namespace ppv {

namespace {

int pairing_with_root(const CartanMatrix& c, const DimVector& beta, int i) {
    int s = 0;
    for (int j = 0; j < c.n; ++j) s += c.at(i, j) * beta[j];
    return s;
}

/// All gamma with 0 <= gamma <= beta componentwise, sorted by height.
std::vector<DimVector> box_below(const DimVector& beta) {
    std::vector<DimVector> out;
    DimVector cur(beta.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t k = 0;
        while (k < cur.size() && cur[k] == beta[k]) cur[k++] = 0;
        if (k == cur.size()) break;
        ++cur[k];
    }
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<DimVector> positive_roots(const CartanMatrix& c, int height_bound) {
    std::set<DimVector> roots;
    std::vector<DimVector> frontier;
    for (int i = 0; i < c.n; ++i) {
        DimVector a(c.n, 0);
        a[i] = 1;
        roots.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (const DimVector& b : frontier) {
            for (int i = 0; i < c.n; ++i) {
                int p = pairing_with_root(c, b, i);
                DimVector r = b;
                r[i] -= p;
                if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
                if (height(r) > height_bound)
                    throw NotFiniteType("root closure exceeded height bound");
                if (roots.insert(r).second) next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    std::vector<DimVector> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

long kostant_count(const CartanMatrix& c, const DimVector& beta) {
    std::vector<DimVector> roots = positive_roots(c);
    // DP over roots: number of ways to fill beta with nonnegative multiples.
    std::map<DimVector, long> ways;
    ways[DimVector(beta.size(), 0)] = 1;
    for (const DimVector& r : roots) {
        std::map<DimVector, long> next;
        for (const DimVector& g : box_below(beta)) {
            long total = 0;
            DimVector rest = g;
            while (true) {
                auto it = ways.find(rest);
                if (it != ways.end()) total += it->second;
                bool ok = true;
                for (size_t i = 0; i < rest.size(); ++i) {
                    rest[i] -= r[i];
                    if (rest[i] < 0) ok = false;
                }
                if (!ok) break;
            }
            if (total != 0) next[g] = total;
        }
        ways = std::move(next);
    }
    auto it = ways.find(beta);
    return it == ways.end() ? 0 : it->second;
}

long freudenthal_mult(const CartanMatrix& c, const Weight& lambda, const DimVector& beta) {
    if (!is_dominant(lambda)) throw NotDominant("Freudenthal requires dominant lambda");
    std::vector<DimVector> roots = positive_roots(c);
    std::map<DimVector, long> mult;
    for (const DimVector& g : box_below(beta)) {
        if (height(g) == 0) {
            mult[g] = 1;
            continue;
        }
        // mu = lambda - g; pairings (mu;alpha_i) derived from the Cartan matrix.
        // Denominator: (lambda+mu+2rho ; g).
        long denom = 0;
        for (int i = 0; i < c.n; ++i) {
            long mu_i = weight_pairing(c, lambda, g, i);
            denom += static_cast<long>(g[i]) * (lambda[i] + mu_i + 2);
        }
        mpq_class rhs = 0;
        for (const DimVector& r : roots) {
            for (int k = 1;; ++k) {
                DimVector rest = g;
                bool ok = true;
                for (size_t i = 0; i < rest.size(); ++i) {
                    rest[i] -= k * r[i];
                    if (rest[i] < 0) ok = false;
                }
                if (!ok) break;
                long m = mult.at(rest);
                if (m == 0) continue;
                // (mu + k*r ; r)
                long pr = 0;
                for (int i = 0; i < c.n; ++i) {
                    long mu_i = weight_pairing(c, lambda, g, i);
                    pr += static_cast<long>(r[i]) * (mu_i + k * pairing_with_root(c, r, i));
                }
                rhs += mpq_class(2L * pr * m);
            }
        }
        if (denom == 0) {
            if (rhs != 0) throw Error("Freudenthal: zero denominator with nonzero sum");
            mult[g] = 0;
            continue;
        }
        mpq_class m = rhs / mpq_class(denom);
        if (m.get_den() != 1 || m < 0)
            throw Error("Freudenthal: non-integral multiplicity");
        mult[g] = static_cast<long>(m.get_num().get_si());
    }
    return mult.at(beta);
}

long weyl_dim(const CartanMatrix& c, const Weight& lambda) {
    if (!is_dominant(lambda)) throw NotDominant("Weyl dimension requires dominant lambda");
    std::vector<DimVector> roots = positive_roots(c);
    mpq_class d = 1;
    for (const DimVector& r : roots) {
        long num = 0, den = 0;
        for (int i = 0; i < c.n; ++i) {
            num += static_cast<long>(r[i]) * (lambda[i] + 1);
            den += r[i];
        }
        d *= mpq_class(num, den);
    }
    d.canonicalize();
    if (d.get_den() != 1) throw Error("Weyl dimension: non-integral result");
    return static_cast<long>(d.get_num().get_si());
}

}  // namespace ppv
