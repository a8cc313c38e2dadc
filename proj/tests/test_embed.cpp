#include "doctest.h"

#include "ppv/catalog.hpp"
#include "ppv/embed.hpp"
#include "ppv/pp_algebra.hpp"
#include "ppv/root_datum.hpp"

using namespace ppv;

namespace {

const DoubleQuiver& a2q() {
    static DoubleQuiver dq = double_quiver(builtin_graph("A2"));
    return dq;
}

const std::vector<QModule>& a2inj() {
    static std::vector<QModule> inj = [] {
        PathAlgebra alg = build_path_algebra(a2q());
        return std::vector<QModule>{injective_module(alg, 0), injective_module(alg, 1)};
    }();
    return inj;
}

QModule simples(int n1, int n2) {
    QModule m = make_zero_module(a2q(), RatField{}, DimVector(2, 0));
    for (int k = 0; k < n1; ++k) m = add_simple(m, 0);
    for (int k = 0; k < n2; ++k) m = add_simple(m, 1);
    return m;
}

}  // namespace

TEST_CASE("socle multiplicities") {
    CHECK(socle_mults(simples(2, 0)) == DimVector{2, 0});
    QModule x4 = make_zero_module(a2q(), RatField{}, {1, 1});
    x4.mats[0].at(0, 0) = 1;
    CHECK(socle_mults(x4) == DimVector{0, 1});
    CHECK(socle_mults(injective_sum_of(a2inj(), {1, 1})) == DimVector{1, 1});
}

TEST_CASE("choose_nu") {
    CHECK(choose_nu(simples(2, 0), {1, 1}) == Weight{2, 1});
    CHECK(choose_nu(simples(0, 0), {2, 1}) == Weight{2, 1});
    CHECK(choose_nu(simples(0, 0), {-1, 0}) == Weight{0, 0});
}

TEST_CASE("embedding the semisimple module into q_lambda") {
    QModule x3 = simples(1, 1);
    auto e = embed(x3, {1, 1}, a2inj());
    CHECK(e.ambient.dims == DimVector{2, 2});
    CHECK(e.coker.dims == DimVector{1, 1});
    // cokernel is s1 + s2: both induced arrow maps vanish
    CHECK(e.coker.mats[0].is_zero());
    CHECK(e.coker.mats[1].is_zero());
    CHECK(phi(e, 0) == 1);
    CHECK(phi(e, 1) == 1);
}

TEST_CASE("embedding zero gives the whole injective as cokernel") {
    QModule zero = simples(0, 0);
    auto e = embed(zero, {1, 1}, a2inj());
    CHECK(e.coker.dims == DimVector{2, 2});
    CHECK(is_isomorphic(e.coker, e.ambient));
}

TEST_CASE("the projective-line example: s1+s1 inside two copies of q1") {
    QModule x = simples(2, 0);
    auto e = embed(x, {2, 0}, a2inj());
    CHECK(e.ambient.dims == DimVector{2, 2});
    CHECK(e.coker.dims == DimVector{0, 2});
    CHECK(phi(e, 1) == 2);  // the ambient projective line
    CHECK(phi(e, 0) == 0);  // no room to grow at vertex 1
    CHECK_THROWS_AS(embed(x, {1, 1}, a2inj()), NoEmbedding);
}

TEST_CASE("phi - epsilon law across the catalog") {
    static Catalog cat = build_catalog(a2q(), 4);
    CartanMatrix cartan = build_cartan(builtin_graph("A2"));
    Weight lambda = {1, 1};
    for (const auto& cls : cat.classes()) {
        DimVector a = socle_mults(cls.rep);
        bool embeddable = true;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > lambda[i]) embeddable = false;
        if (!embeddable) continue;
        auto e = embed(cls.rep, lambda, a2inj());
        for (int i = 0; i < 2; ++i)
            CHECK(phi(e, i) - epsilon(cls.rep, i) ==
                  weight_pairing(cartan, lambda, cls.beta, i));
    }
}

TEST_CASE("embeddings work the same over prime fields") {
    PrimeField F5(5);
    std::vector<PModule> inj5;
    for (const QModule& q : a2inj()) inj5.push_back(reduce_mod_p(q, F5));
    PModule x = reduce_mod_p(simples(2, 0), F5);
    auto e = embed(x, {2, 0}, inj5);
    CHECK(e.coker.dims == DimVector{0, 2});
    CHECK(phi(e, 1) == 2);

    PModule x3 = reduce_mod_p(simples(1, 1), F5);
    auto e3 = embed(x3, {1, 1}, inj5);
    CHECK(e3.coker.dims == DimVector{1, 1});
    CHECK(e3.coker.mats[0].is_zero());
}
