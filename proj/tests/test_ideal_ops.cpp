#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "beikit/ideal.hpp"
#include "beikit/parse.hpp"

using namespace beikit;

namespace {

Ideal<Rat> all_minors(const RingContext& ctx, int a, int b) {
    std::vector<Polynomial<Rat>> gens;
    for (int i = a; i < b; ++i)
        for (int j = i + 1; j <= b; ++j) gens.push_back(minor2<Rat>(ctx, i, j));
    return Ideal<Rat>(ctx, std::move(gens));
}

Polynomial<Rat> random_poly(std::mt19937_64& rng, const RingContext& ctx, int terms) {
    std::uniform_int_distribution<int> row(1, 2), col(1, ctx.cols), exp(0, 1), coef(-3, 3);
    std::vector<Term<Rat>> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < 2; ++v) {
            int e = exp(rng);
            if (e) m = m * Monomial::var(matvar(row(rng), col(rng)), e);
        }
        ts.push_back({m, Rat(coef(rng))});
    }
    return Polynomial<Rat>::from_terms(ctx, std::move(ts));
}

} // namespace

TEST_CASE("coprime principal ideals intersect in the product") {
    RingContext ctx = classic_ring(1);
    Ideal<Rat> a(ctx, {Polynomial<Rat>::variable(ctx, xvar(1))});
    Ideal<Rat> b(ctx, {Polynomial<Rat>::variable(ctx, yvar(1))});
    Ideal<Rat> cap = intersect(a, b);
    Ideal<Rat> expected(ctx, {parse_poly<Rat>("x1*y1", ctx)});
    CHECK(ideal_equal(cap, expected));
}

TEST_CASE("six-column worked example: P cap I2(X[1,6]) is an edge-minor ideal") {
    RingContext ctx = classic_ring(6);
    std::vector<Polynomial<Rat>> pgens = {Polynomial<Rat>::variable(ctx, xvar(3)),
                                          Polynomial<Rat>::variable(ctx, yvar(3))};
    for (int i = 4; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j) pgens.push_back(minor2<Rat>(ctx, i, j));
    Ideal<Rat> p(ctx, std::move(pgens));
    Ideal<Rat> cap = intersect(p, all_minors(ctx, 1, 6));

    std::vector<std::pair<int, int>> edges = {{3, 6}, {3, 5}, {3, 4}, {2, 3},
                                              {1, 3}, {5, 6}, {4, 6}, {4, 5}};
    std::vector<Polynomial<Rat>> jg;
    for (auto [u, v] : edges) jg.push_back(minor2<Rat>(ctx, std::min(u, v), std::max(u, v)));
    CHECK(ideal_equal(cap, Ideal<Rat>(ctx, std::move(jg))));
}

TEST_CASE("colon of a squared principal ideal") {
    RingContext ctx = classic_ring(2);
    auto f12 = minor2<Rat>(ctx, 1, 2);
    Ideal<Rat> sq(ctx, {f12 * f12});
    Ideal<Rat> c = colon(sq, Ideal<Rat>(ctx, {f12}));
    CHECK(ideal_equal(c, Ideal<Rat>(ctx, {f12})));
}

TEST_CASE("colon by the zero ideal is rejected") {
    RingContext ctx = classic_ring(2);
    Ideal<Rat> a(ctx, {minor2<Rat>(ctx, 1, 2)});
    CHECK_THROWS_AS(colon(a, Ideal<Rat>(ctx)), DomainError);
}

TEST_CASE("membership in edge-minor ideals") {
    RingContext ctx = classic_ring(3);
    Ideal<Rat> k3 = all_minors(ctx, 1, 3);
    CHECK(membership(minor2<Rat>(ctx, 1, 3), k3));
    Ideal<Rat> path(ctx, {minor2<Rat>(ctx, 1, 2), minor2<Rat>(ctx, 2, 3)});
    CHECK(!membership(minor2<Rat>(ctx, 1, 3), path));
}

TEST_CASE("unit multiples generate the same ideal") {
    RingContext ctx = classic_ring(2);
    auto f12 = minor2<Rat>(ctx, 1, 2);
    Ideal<Rat> a(ctx, {f12});
    Ideal<Rat> b(ctx, {f12.scalar_mul(Rat(-3))});
    CHECK(ideal_equal(a, b));
    CHECK(ideal_contains(a, b));
    CHECK(ideal_contains(b, a));
}

TEST_CASE("elimination keeps only subring polynomials") {
    RingContext ctx = classic_ring(2);
    // (x1 - y2, x2) eliminated of x1, x2 leaves nothing of degree 1 in x
    Ideal<Rat> i(ctx, {parse_poly<Rat>("x1 - y2", ctx), Polynomial<Rat>::variable(ctx, xvar(2))});
    Ideal<Rat> e = eliminate(i, {xvar(1), xvar(2)});
    CHECK(e.reduced_gb().empty());
    // (x1 - y2, x1) contains y2
    Ideal<Rat> j(ctx, {parse_poly<Rat>("x1 - y2", ctx), Polynomial<Rat>::variable(ctx, xvar(1))});
    Ideal<Rat> ej = eliminate(j, {xvar(1), xvar(2)});
    CHECK(ideal_equal(ej, Ideal<Rat>(ctx, {Polynomial<Rat>::variable(ctx, yvar(2))})));
}

TEST_CASE("sum distributes over intersection for adjacent-column ideals") {
    RingContext ctx = classic_ring(3);
    Ideal<Rat> i(ctx, {Polynomial<Rat>::variable(ctx, xvar(1)),
                       Polynomial<Rat>::variable(ctx, yvar(1))});
    Ideal<Rat> j(ctx, {minor2<Rat>(ctx, 2, 3)});
    Ideal<Rat> k(ctx, {Polynomial<Rat>::variable(ctx, xvar(2)),
                       Polynomial<Rat>::variable(ctx, yvar(2))});
    Ideal<Rat> lhs = sum(i, intersect(j, k));
    Ideal<Rat> rhs = intersect(sum(i, j), sum(i, k));
    CHECK(ideal_equal(lhs, rhs));
}

TEST_CASE("intersection and colon agree with the membership oracle") {
    std::mt19937_64 rng(20240915);
    RingContext ctx = classic_ring(2);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Ideal<Rat> i(ctx, {random_poly(rng, ctx, 2), random_poly(rng, ctx, 2)});
        Ideal<Rat> j(ctx, {random_poly(rng, ctx, 2)});
        if (j.gens().empty()) continue;
        Ideal<Rat> cap = intersect(i, j);
        Ideal<Rat> quo = colon(i, j);
        for (int t = 0; t < 4; ++t) {
            auto p = random_poly(rng, ctx, 2);
            bool in_both = membership(p, i) && membership(p, j);
            CHECK(membership(p, cap) == in_both);
            bool all_products = true;
            for (const auto& g : j.gens())
                if (!membership(p * g, i)) all_products = false;
            CHECK(membership(p, quo) == all_products);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("canonical key and hash are stable") {
    RingContext ctx = classic_ring(2);
    Ideal<Rat> a(ctx, {minor2<Rat>(ctx, 1, 2)});
    Ideal<Rat> b(ctx, {minor2<Rat>(ctx, 1, 2).scalar_mul(Rat(5))});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(gb_hash_hex(a) == gb_hash_hex(b));
    CHECK(gb_hash_hex(a).size() == 16);
}
