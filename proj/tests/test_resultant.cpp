#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "chenlorenz/equiv.hpp"
#include "chenlorenz/matrix.hpp"
#include "chenlorenz/multipoly.hpp"
#include "chenlorenz/resultant.hpp"

#include "oracles.hpp"

using namespace chenlorenz;

TEST_CASE("determinant basics") {
    CHECK(determinant(SquareMatrix<Rational>::identity(5)) == 1);
    SquareMatrix<Rational> m(2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK(determinant(m) == -2);
}

TEST_CASE("determinant handles zero pivots and singular matrices") {
    SquareMatrix<Rational> m(3);
    // Row-swapped permutation-ish matrix, det = -1 after one swap.
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(2, 2) = 1;
    CHECK(determinant(m) == -1);
    SquareMatrix<Rational> s(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = i + 1; // rank 1
    CHECK(determinant(s) == 0);
}

TEST_CASE("sylvester matrix layout") {
    SECTION("2x2 example") {
        auto s = sylvester_matrix(UniPoly({-1, 1}), UniPoly({1, 1}));
        REQUIRE(s.order() == 2);
        CHECK(s(0, 0) == 1);
        CHECK(s(0, 1) == -1);
        CHECK(s(1, 0) == 1);
        CHECK(s(1, 1) == 1);
    }
    SECTION("matching cubic/quadratic pair reproduces the published 5x5 layout") {
        InvariantTriple t{Rational(22), Rational(-410), Rational(-2475), Rational(140)};
        MatchingSystem ms = matching_system(t);
        auto s = sylvester_matrix(ms.cubic, ms.quadratic);
        REQUIRE(s.order() == 5);
        Rational u = t.u, v = t.v, w = t.w, k = t.k;
        Rational expected[5][5] = {
            {1, -u, v, -w, 0},
            {0, 1, -u, v, -w},
            {u - 1, u + v - u * u - k, (u - 1) * k, 0, 0},
            {0, u - 1, u + v - u * u - k, (u - 1) * k, 0},
            {0, 0, u - 1, u + v - u * u - k, (u - 1) * k},
        };
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(s(i, j) == expected[i][j]);
    }
    SECTION("rejects zero and constant polynomials") {
        CHECK_THROWS_AS(sylvester_matrix(UniPoly::zero(), UniPoly({1, 1})),
                        std::domain_error);
        CHECK_THROWS_AS(sylvester_matrix(UniPoly({1, 1}), UniPoly({3})),
                        std::domain_error);
    }
}

TEST_CASE("resultant examples") {
    UniPoly p = UniPoly::linear_root(1) * UniPoly::linear_root(2) * UniPoly::linear_root(3);
    UniPoly q = UniPoly::linear_root(4) * UniPoly::linear_root(5);
    CHECK(oracles::resultant_from_roots({1, 2, 3}, {4, 5}) == 144);
    CHECK(resultant(p, q) == 144);
    CHECK(resultant(UniPoly::monomial(3), UniPoly::monomial(2)) == 0);
    CHECK(determinant(sylvester_matrix(UniPoly::monomial(3), UniPoly::monomial(2))) == 0);
    CHECK_THROWS_AS(resultant(UniPoly::zero(), q), std::domain_error);
}

TEST_CASE("certificate-point determinant matches the reduction oracle") {
    InvariantTriple t = InvariantTriple::from_chen({45, 5, 28});
    MatchingSystem ms = matching_system(t);
    Rational oracle = oracles::resultant_cubic_quadratic(ms.cubic, ms.quadratic);
    CHECK(oracle == Rational(Int("291933448125")));
    CHECK(determinant(sylvester_matrix(ms.cubic, ms.quadratic)) == oracle);
    CHECK(resultant(ms.cubic, ms.quadratic) == oracle);
}

TEST_CASE("resultant agrees with remainder-sequence oracle; zero iff common root") {
    std::mt19937 gen(31);
    for (int i = 0; i < 200; ++i) {
        UniPoly p = oracles::random_int_poly(gen, 3);
        UniPoly q = oracles::random_int_poly(gen, 2);
        Rational r = resultant(p, q);
        CHECK(r == oracles::resultant_prs(p, q));
        CHECK((r == 0) == (poly_gcd(p, q).degree() >= 1));
    }
    // Seeded common roots force zero.
    for (int i = 0; i < 40; ++i) {
        Rational root = oracles::random_rational(gen, 8, 3);
        UniPoly p = UniPoly::linear_root(root) * oracles::random_int_poly(gen, 2);
        UniPoly q = UniPoly::linear_root(root) * oracles::random_int_poly(gen, 1);
        CHECK(resultant(p, q) == 0);
        CHECK(poly_gcd(p, q).degree() >= 1);
    }
}

TEST_CASE("multipoly arithmetic and exact division") {
    MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1);
    SECTION("x^2 - y^2 divided by x - y") {
        auto q = mpoly_divide_exact(x * x - y * y, x - y);
        REQUIRE(q.has_value());
        CHECK(*q == x + y);
    }
    SECTION("x^2 + 1 not divisible by x") {
        CHECK_FALSE(mpoly_divide_exact(x * x + MultiPoly(1), x).has_value());
    }
    SECTION("division by zero rejected") {
        CHECK_THROWS_AS(mpoly_divide_exact(x, MultiPoly()), std::domain_error);
    }
    SECTION("no zero terms stored") {
        MultiPoly z = x * y - x * y;
        CHECK(z.is_zero());
        CHECK(z.terms().empty());
    }
}

TEST_CASE("multipoly multiplication/evaluation commute on random data") {
    std::mt19937 gen(37);
    MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1), c = MultiPoly::var(2);
    MultiPoly f = a * a * b - MultiPoly(3) * b * c + MultiPoly(Rational(1, 2)) * c;
    MultiPoly g = a - MultiPoly(2) * c + b * b;
    MultiPoly fg = f * g;
    for (int i = 0; i < 50; ++i) {
        Rational x = oracles::random_rational(gen), y = oracles::random_rational(gen),
                 z = oracles::random_rational(gen);
        CHECK(fg.eval(x, y, z) == f.eval(x, y, z) * g.eval(x, y, z));
        auto q = mpoly_divide_exact(fg, g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
    }
}

TEST_CASE("polynomial-entry determinant commutes with evaluation") {
    // The symbolic 5x5 resultant matrix, evaluated entrywise vs. after
    // taking the determinant over the polynomial ring.
    MultiPoly sym = symbolic_m0();
    std::mt19937 gen(41);
    for (int i = 0; i < 50; ++i) {
        Rational a = oracles::random_rational(gen, 12, 4);
        Rational b = oracles::random_rational(gen, 12, 4);
        Rational c = oracles::random_rational(gen, 12, 4);
        CHECK(sym.eval(a, b, c) == obstruction_m0(ChenParams{a, b, c}));
    }
}
