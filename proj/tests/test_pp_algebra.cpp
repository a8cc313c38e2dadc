#include "doctest.h"

#include "ppv/pp_algebra.hpp"
#include "support/oracles.hpp"

using namespace ppv;

TEST_CASE("graded basis for A2") {
    DoubleQuiver dq = double_quiver(builtin_graph("A2"));
    PathAlgebra alg = build_path_algebra(dq);
    // degrees 0 and 1 survive whole; both length-2 paths are relations
    REQUIRE(alg.degrees.size() == 3);
    CHECK(alg.degrees[0].basis.size() == 2);
    CHECK(alg.degrees[1].basis.size() == 2);
    CHECK(alg.degrees[2].basis.empty());
    CHECK(alg.total_dim() == 4);
    CHECK(alg.total_dim() == oracle::algebra_dim_by_products(dq, 4));
    CHECK(alg.dim_between(0, 0) == 1);
    CHECK(alg.dim_between(0, 1) == 1);
    CHECK(alg.dim_between(1, 0) == 1);
    CHECK(alg.dim_between(1, 1) == 1);
}

TEST_CASE("graded basis for A1 and A3 against the product oracle") {
    DoubleQuiver a1 = double_quiver(builtin_graph("A1"));
    PathAlgebra alg1 = build_path_algebra(a1, 2);
    CHECK(alg1.total_dim() == 1);
    CHECK(alg1.degrees.size() == 2);
    CHECK(alg1.degrees[1].span.empty());

    DoubleQuiver a3 = double_quiver(builtin_graph("A3"));
    PathAlgebra alg3 = build_path_algebra(a3);
    CHECK(alg3.total_dim() == oracle::algebra_dim_by_products(a3, 5));
    CHECK(alg3.total_dim() == 10);

    DoubleQuiver d4 = double_quiver(builtin_graph("D4"));
    PathAlgebra algd = build_path_algebra(d4);
    CHECK(algd.total_dim() == oracle::algebra_dim_by_products(d4, 7));
}

TEST_CASE("non-Dynkin graph exceeds the cap") {
    Graph dbl;
    dbl.n = 2;
    dbl.edges = {{0, 1}, {0, 1}};
    DoubleQuiver dq = double_quiver(dbl);
    CHECK_THROWS_AS(build_path_algebra(dq, 50, 100000000), CapExceeded);
}

TEST_CASE("injective modules of A2") {
    static DoubleQuiver dq = double_quiver(builtin_graph("A2"));
    PathAlgebra alg = build_path_algebra(dq);
    QModule q1 = injective_module(alg, 0);
    CHECK(q1.dims == DimVector{1, 1});
    // socle at vertex 0: the mate arrow (into 0) acts nontrivially
    CHECK(q1.mats[0].is_zero());
    CHECK_FALSE(q1.mats[1].is_zero());
    CHECK(socle_dims(q1) == DimVector{1, 0});
    CHECK(head_dims(q1) == DimVector{0, 1});

    QModule q2 = injective_module(alg, 1);
    CHECK(q2.dims == DimVector{1, 1});
    CHECK_FALSE(q2.mats[0].is_zero());
    CHECK(q2.mats[1].is_zero());
    CHECK(socle_dims(q2) == DimVector{0, 1});
}

TEST_CASE("injective socles for A3 and D4") {
    for (const char* name : {"A3", "D4"}) {
        static std::vector<DoubleQuiver> keep;
        keep.push_back(double_quiver(builtin_graph(name)));
        const DoubleQuiver& dq = keep.back();
        PathAlgebra alg = build_path_algebra(dq);
        for (int i = 0; i < dq.num_vertices(); ++i) {
            QModule qi = injective_module(alg, i);
            DimVector want(dq.num_vertices(), 0);
            want[i] = 1;
            CHECK(socle_dims(qi) == want);
        }
    }
}

TEST_CASE("hom into an injective counts the dimension at its socle vertex") {
    static DoubleQuiver dq = double_quiver(builtin_graph("A2"));
    PathAlgebra alg = build_path_algebra(dq);
    std::vector<QModule> qs = {injective_module(alg, 0), injective_module(alg, 1)};
    std::vector<QModule> samples;
    samples.push_back(make_simple(dq, RatField{}, 0));
    samples.push_back(make_simple(dq, RatField{}, 1));
    samples.push_back(qs[0]);
    samples.push_back(qs[1]);
    samples.push_back(direct_sum(qs[0], qs[1]));
    samples.push_back(direct_sum(samples[0], samples[0]));
    for (const QModule& x : samples)
        for (int i = 0; i < 2; ++i) CHECK(hom_dim(x, qs[i]) == x.dims[i]);
}

TEST_CASE("injective dimension vectors ignore the orientation choice") {
    for (const char* name : {"A2", "A3"}) {
        Graph g = builtin_graph(name);
        static std::vector<DoubleQuiver> keep;
        keep.push_back(double_quiver(g));
        keep.push_back(double_quiver(g, std::vector<bool>(g.edges.size(), true)));
        const DoubleQuiver& fwd = keep[keep.size() - 2];
        const DoubleQuiver& rev = keep.back();
        PathAlgebra af = build_path_algebra(fwd);
        PathAlgebra ar = build_path_algebra(rev);
        CHECK(af.total_dim() == ar.total_dim());
        for (int i = 0; i < g.n; ++i)
            CHECK(injective_module(af, i).dims == injective_module(ar, i).dims);
    }
}

TEST_CASE("injective sums") {
    static DoubleQuiver dq = double_quiver(builtin_graph("A2"));
    PathAlgebra alg = build_path_algebra(dq);
    QModule q = injective_sum(alg, {1, 1});
    CHECK(q.dims == DimVector{2, 2});
    CHECK(socle_dims(q) == DimVector{1, 1});
    QModule q20 = injective_sum(alg, {2, 0});
    CHECK(q20.dims == DimVector{2, 2});
    CHECK(socle_dims(q20) == DimVector{2, 0});
    CHECK(injective_sum(alg, {0, 0}).total_dim() == 0);
    CHECK_THROWS_AS(injective_sum(alg, {-1, 0}), NotDominant);
}
