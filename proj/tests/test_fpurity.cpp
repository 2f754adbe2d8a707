#include <catch2/catch_amalgamated.hpp>

#include "beikit/bei.hpp"
#include "beikit/fpurity.hpp"
#include "beikit/parse.hpp"

using namespace beikit;

TEST_CASE("frobenius bracket powers") {
    RingContext c2 = classic_ring(1, 2);
    Ideal<Fp> x1(c2, {Polynomial<Fp>::variable(c2, xvar(1))});
    auto sq = frobenius_power(x1, 2);
    REQUIRE(sq.gens().size() == 1);
    CHECK(sq.gens()[0] == parse_poly<Fp>("x1^2", c2));

    RingContext c22 = classic_ring(2, 2);
    Ideal<Fp> f12(c22, {minor2<Fp>(c22, 1, 2)});
    auto fsq = frobenius_power(f12, 2);
    CHECK(fsq.gens()[0] == parse_poly<Fp>("x1^2*y2^2 + x2^2*y1^2", c22)); // freshman's dream

    RingContext c13 = classic_ring(1, 3);
    Ideal<Fp> col(c13, {Polynomial<Fp>::variable(c13, xvar(1)),
                        Polynomial<Fp>::variable(c13, yvar(1))});
    auto cube = frobenius_power(col, 3);
    CHECK(cube.gens()[0] == parse_poly<Fp>("x1^3", c13));
    CHECK(cube.gens()[1] == parse_poly<Fp>("y1^3", c13));

    RingContext wrong = classic_ring(2, 3);
    Ideal<Fp> i3(wrong, {minor2<Fp>(wrong, 1, 2)});
    CHECK_THROWS_AS(frobenius_power(i3, 2), ContextError);
}

TEST_CASE("Fedder on a principal minor ideal") {
    RingContext ctx = classic_ring(2, 2);
    Ideal<Fp> i(ctx, {minor2<Fp>(ctx, 1, 2)});
    auto rep = fedder_is_fpure(i, 2);
    CHECK(rep.f_pure);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == minor2<Fp>(ctx, 1, 2)); // colon is (f12) again
    CHECK(rep.colon_gb_size == 1);
}

TEST_CASE("Fedder on a column variable ideal") {
    RingContext ctx = classic_ring(1, 2);
    Ideal<Fp> i(ctx, {Polynomial<Fp>::variable(ctx, xvar(1)),
                      Polynomial<Fp>::variable(ctx, yvar(1))});
    auto rep = fedder_is_fpure(i, 2);
    CHECK(rep.f_pure);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == parse_poly<Fp>("x1*y1", ctx));
}

TEST_CASE("Fedder on the path ideal") {
    auto j = binomial_edge_ideal<Fp>(path_graph(3), 2);
    auto rep = fedder_is_fpure(j, 2);
    CHECK(rep.f_pure);
    REQUIRE(rep.witness.has_value());
    // witness replay: g * h lies in I^[p] for every generator h
    auto br = frobenius_power(j, 2);
    for (const auto& h : j.gens()) CHECK(membership(*rep.witness * h, br));
    bool has_small_monomial = false;
    for (const auto& t : rep.witness->terms()) {
        bool small = true;
        for (auto& [k, e] : t.mono.entries())
            if (e >= 2) small = false;
        if (small) has_small_monomial = true;
    }
    CHECK(has_small_monomial);
}

TEST_CASE("Fedder degenerate and error cases") {
    RingContext ctx = classic_ring(2, 2);
    Ideal<Fp> zero(ctx);
    auto rep = fedder_is_fpure(zero, 2);
    CHECK(rep.f_pure); // the ring itself is regular
    CHECK(rep.witness->is_constant());

    Ideal<Fp> unit(ctx, {Polynomial<Fp>::constant(ctx, 1)});
    CHECK_THROWS_AS(fedder_is_fpure(unit, 2), DomainError);

    RingContext big = classic_ring(5, 2);
    Ideal<Fp> toobig(big, {minor2<Fp>(big, 1, 2)});
    CHECK_THROWS_AS(fedder_is_fpure(toobig, 2), CapacityError);
}

TEST_CASE("weakly closed connected graphs are F-pure at p = 2, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        enumerate_graphs(n, true, [&](const Graph& g) {
            if (!find_weakly_closed_labeling(g)) return;
            auto rep = fedder_is_fpure(binomial_edge_ideal<Fp>(g, 2), 2);
            CHECK(rep.f_pure);
        });
}

TEST_CASE("generalized ideals of weakly closed graphs are F-pure, m = 3") {
    for (int n = 1; n <= 2; ++n)
        enumerate_graphs(n, true, [&](const Graph& g) {
            if (!find_weakly_closed_labeling(g)) return;
            auto rep = fedder_is_fpure(generalized_bei<Fp>(g, 3, 2), 2);
            CHECK(rep.f_pure);
        });
}
