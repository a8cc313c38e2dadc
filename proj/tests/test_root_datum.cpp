#include "doctest.h"

#include "ppv/root_datum.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace ppv;

namespace {
Graph a2() { return builtin_graph("A2"); }
}

TEST_CASE("build_cartan") {
    CartanMatrix c = build_cartan(a2());
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(0, 1) == -1);
    CHECK(c.at(1, 0) == -1);
    CHECK(c.at(1, 1) == 2);

    Graph single;
    single.n = 1;
    CHECK(build_cartan(single).at(0, 0) == 2);

    Graph dbl;
    dbl.n = 2;
    dbl.edges = {{0, 1}, {0, 1}};
    CartanMatrix cd = build_cartan(dbl);
    CHECK(cd.at(0, 1) == -2);

    Graph loop;
    loop.n = 1;
    loop.edges = {{0, 0}};
    CHECK_THROWS_AS(build_cartan(loop), LoopEdge);
}

TEST_CASE("cartan symmetric with diagonal 2 on random loop-free graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g;
        g.n = 2 + int(rng() % 4);
        int e = int(rng() % 6);
        for (int k = 0; k < e; ++k) {
            int i = int(rng() % g.n), j = int(rng() % g.n);
            if (i != j) g.edges.push_back({i, j});
        }
        CartanMatrix c = build_cartan(g);
        for (int i = 0; i < g.n; ++i) {
            CHECK(c.at(i, i) == 2);
            for (int j = 0; j < g.n; ++j) CHECK(c.at(i, j) == c.at(j, i));
        }
    }
}

TEST_CASE("sym_form and weight_pairing on A2") {
    CartanMatrix c = build_cartan(a2());
    CHECK(sym_form(c, {1, 0}, {1, 0}) == 2);
    CHECK(sym_form(c, {1, 0}, {0, 1}) == -1);
    CHECK(sym_form(c, {1, 1}, {1, 1}) == 2);

    CHECK(weight_pairing(c, {1, 1}, {0, 0}, 0) == 1);
    CHECK(weight_pairing(c, {1, 1}, {1, 0}, 0) == -1);
    CHECK(weight_pairing(c, {1, 1}, {1, 1}, 0) == 0);

    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        DimVector b = {int(rng() % 5), int(rng() % 5)};
        DimVector g = {int(rng() % 5), int(rng() % 5)};
        CHECK(sym_form(c, b, g) == sym_form(c, g, b));
    }
}

TEST_CASE("positive roots") {
    CHECK(positive_roots(build_cartan(a2())) ==
          std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(positive_roots(build_cartan(builtin_graph("A1"))).size() == 1);
    CHECK(positive_roots(build_cartan(builtin_graph("A3"))).size() == 6);
    CHECK(positive_roots(build_cartan(builtin_graph("A4"))).size() == 10);
    CHECK(positive_roots(build_cartan(builtin_graph("D4"))).size() == 12);

    Graph affine;
    affine.n = 2;
    affine.edges = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(positive_roots(build_cartan(affine), 100), NotFiniteType);
}

TEST_CASE("kostant_count") {
    CartanMatrix c = build_cartan(a2());
    CHECK(kostant_count(c, {0, 0}) == 1);
    CHECK(kostant_count(c, {1, 1}) == oracle::kostant_by_enumeration(c, {1, 1}));
    CHECK(kostant_count(c, {1, 1}) == 2);
    CHECK(kostant_count(c, {2, 1}) == 2);

    CartanMatrix c3 = build_cartan(builtin_graph("A3"));
    for (int b1 = 0; b1 <= 2; ++b1)
        for (int b2 = 0; b2 <= 2; ++b2)
            for (int b3 = 0; b3 <= 2; ++b3)
                CHECK(kostant_count(c3, {b1, b2, b3}) ==
                      oracle::kostant_by_enumeration(c3, {b1, b2, b3}));
}

TEST_CASE("kostant generating series matches product formula") {
    CartanMatrix c = build_cartan(a2());
    const int cutoff = 6;
    // coefficients of prod over roots (1 - t^ht)^-1 up to t^cutoff
    std::vector<long> prod(cutoff + 1, 0);
    prod[0] = 1;
    for (const DimVector& r : positive_roots(c)) {
        int h = height(r);
        for (int d = h; d <= cutoff; ++d) prod[d] += prod[d - h];
    }
    // sum of kostant counts by height
    std::vector<long> byh(cutoff + 1, 0);
    for (int b1 = 0; b1 <= cutoff; ++b1)
        for (int b2 = 0; b2 + b1 <= cutoff; ++b2)
            byh[b1 + b2] += kostant_count(c, {b1, b2});
    CHECK(byh == prod);
}

TEST_CASE("freudenthal and weyl_dim") {
    CartanMatrix c = build_cartan(a2());
    CHECK(freudenthal_mult(c, {1, 1}, {0, 0}) == 1);
    CHECK(freudenthal_mult(c, {1, 1}, {1, 1}) == 2);
    CHECK(freudenthal_mult(c, {1, 1}, {2, 1}) == 1);
    CHECK(weyl_dim(c, {1, 1}) == 8);
    CHECK(weyl_dim(c, {1, 0}) == 3);
    CHECK(weyl_dim(c, {0, 0}) == 1);
    CHECK_THROWS_AS(freudenthal_mult(c, {-1, 0}, {0, 0}), NotDominant);

    CartanMatrix c3 = build_cartan(builtin_graph("A3"));
    CHECK(weyl_dim(c3, {1, 0, 1}) == 15);
    CHECK(weyl_dim(c3, {1, 0, 0}) == 4);
}

TEST_CASE("freudenthal bounded by kostant; totals match weyl_dim") {
    for (const char* name : {"A2", "A3"}) {
        CartanMatrix c = build_cartan(builtin_graph(name));
        Weight lam(c.n, 1);
        if (c.n == 3) lam = {1, 0, 1};
        long total = 0;
        int cap = 8;
        // enumerate beta with entries <= cap (L(lambda) support is finite)
        std::vector<DimVector> betas = {{DimVector(c.n, 0)}};
        std::vector<int> cur(c.n, 0);
        while (true) {
            size_t k = 0;
            while (k < cur.size() && cur[k] == cap) cur[k++] = 0;
            if (k == cur.size()) break;
            ++cur[k];
            betas.push_back(cur);
        }
        for (const DimVector& b : betas) {
            long f = freudenthal_mult(c, lam, b);
            CHECK(f <= kostant_count(c, b));
            total += f;
        }
        CHECK(total == weyl_dim(c, lam));
    }
}
