#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "beikit/polynomial.hpp"

using namespace beikit;

namespace {

Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp = 3) {
    std::uniform_int_distribution<int> row(1, 2), col(1, n), exp(0, max_exp);
    Monomial m;
    int vars = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < vars; ++i) {
        int e = exp(rng);
        if (e > 0) m = m * Monomial::var(matvar(row(rng), col(rng)), e);
    }
    return m;
}

} // namespace

TEST_CASE("diagonal lex basics") {
    TermOrder ord = TermOrder::diagonal_lex();
    Monomial x1y2 = Monomial::from({{xvar(1), 1}, {yvar(2), 1}});
    Monomial x2y1 = Monomial::from({{xvar(2), 1}, {yvar(1), 1}});
    CHECK(ord.compare(x1y2, x2y1) > 0); // lt(f_12) = x1*y2
    CHECK(ord.compare(x1y2, x1y2) == 0);
    CHECK(ord.compare(x2y1, x1y2) < 0);
    CHECK(ord.compare(Monomial::one(), x2y1) < 0); // 1 is minimal
}

TEST_CASE("every 2-minor leads with its diagonal") {
    TermOrder ord = TermOrder::diagonal_lex();
    for (int n = 2; n <= 9; ++n) {
        RingContext ctx = classic_ring(n);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto f = minor2<Rat>(ctx, i, j);
                CHECK(f.leading_monomial(ord) ==
                      Monomial::from({{xvar(i), 1}, {yvar(j), 1}}));
            }
    }
}

TEST_CASE("lt of y1*f12*x2 is the full diagonal product") {
    RingContext ctx = classic_ring(2);
    auto p = Polynomial<Rat>::variable(ctx, yvar(1)) * minor2<Rat>(ctx, 1, 2) *
             Polynomial<Rat>::variable(ctx, xvar(2));
    Monomial lt = p.leading_monomial(TermOrder::diagonal_lex());
    CHECK(lt == Monomial::from({{xvar(1), 1}, {xvar(2), 1}, {yvar(1), 1}, {yvar(2), 1}}));
    CHECK(lt.squarefree());
}

TEST_CASE("order axioms on random triples") {
    TermOrder ord = TermOrder::diagonal_lex();
    std::mt19937_64 rng(20240601);
    for (int iter = 0; iter < 500; ++iter) {
        Monomial a = random_monomial(rng, 4);
        Monomial b = random_monomial(rng, 4);
        Monomial c = random_monomial(rng, 4);
        // antisymmetry
        CHECK(ord.compare(a, b) == -ord.compare(b, a));
        // transitivity
        if (ord.compare(a, b) >= 0 && ord.compare(b, c) >= 0)
            CHECK(ord.compare(a, c) >= 0);
        // multiplicativity
        int before = ord.compare(a, b);
        CHECK(ord.compare(a * c, b * c) == before);
        // well order
        CHECK(ord.compare(a, Monomial::one()) >= 0);
    }
}

TEST_CASE("block order puts eliminated variables on top") {
    VarId t = auxvar(1);
    TermOrder ord = TermOrder::block({t}, TermOrder::diagonal_lex());
    Monomial tm = Monomial::var(t);
    Monomial big = Monomial::from({{xvar(1), 5}, {yvar(1), 5}});
    CHECK(ord.compare(tm, big) > 0);
    // and within t-free monomials it agrees with diagonal lex
    Monomial a = Monomial::from({{xvar(1), 1}});
    Monomial b = Monomial::from({{yvar(1), 3}});
    CHECK(ord.compare(a, b) > 0);
    CHECK(cmp_diaglex(a, b) > 0);
    // t-degree decides first
    Monomial ta = Monomial::from({{xvar(2), 1}}) * tm;
    CHECK(ord.compare(ta, big) > 0);
}

TEST_CASE("monomial helpers") {
    Monomial a = Monomial::from({{xvar(1), 2}, {yvar(3), 1}});
    Monomial b = Monomial::from({{xvar(1), 1}});
    CHECK(divides(b, a));
    CHECK(!divides(a, b));
    CHECK(quotient(a, b) == Monomial::from({{xvar(1), 1}, {yvar(3), 1}}));
    CHECK(lcm(a, b) == a);
    CHECK(coprime(b, Monomial::var(yvar(3))));
    CHECK(!a.squarefree());
    CHECK(a.degree() == 3);
    CHECK(a.str() == "x1^2*y3");
}
