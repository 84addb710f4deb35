#include <random>

#include "doctest.h"
#include "dialg/linalg.hpp"
#include "dialg/polynomial.hpp"
#include "dialg/rational.hpp"

using namespace dialg;

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and arithmetic") {
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    Rational big = Rational::parse("123456789012345678901234567890");
    CHECK((big * big / big) == big);
}

namespace {

struct Vars {
    EvalContext ctx;
    std::vector<Polynomial> x = ctx.fresh_indeterminates(3, "x");
};

Polynomial random_poly(std::mt19937& rng, const std::vector<Polynomial>& xs) {
    std::uniform_int_distribution<int> coeff(-3, 3), pick(0, static_cast<int>(xs.size()) - 1), terms(0, 3);
    Polynomial p = Rational(coeff(rng));
    int n = terms(rng);
    for (int i = 0; i < n; ++i) p += Rational(coeff(rng)) * xs[pick(rng)] * xs[pick(rng)];
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic examples") {
    Vars v;
    const auto& x = v.x;
    CHECK((x[0] + x[1]) * (x[0] - x[1]) == x[0] * x[0] - x[1] * x[1]);
    Polynomial p = x[0] * x[1] + Rational(2);
    CHECK(p + Polynomial() == p);
    CHECK((Rational(2, 3) * x[0]) * (Rational(3, 2) * x[0]) == x[0] * x[0]);
    CHECK(poly_is_zero(x[0] - x[0]));
    CHECK(poly_is_zero(x[0] * x[1] - x[1] * x[0]));
    CHECK_FALSE(poly_is_zero(x[0] - Rational(2) * x[0]));
}

TEST_CASE("polynomial printing and evaluation") {
    Vars v;
    const auto& x = v.x;
    Polynomial p = x[0] * x[0] - Rational(1, 2) * x[1] + Rational(3);
    CHECK(p.to_string(v.ctx.namer()) == "x_0^2 - 1/2*x_1 + 3");
    CHECK(p.degree() == 2);
    CHECK(p.evaluate([](VarId) { return Rational(2); }) == Rational(6));
    CHECK(p.substitute({{x[1].terms().begin()->first.factors()[0].first, x[0]}}) ==
          x[0] * x[0] - Rational(1, 2) * x[0] + Rational(3));
}

TEST_CASE("fresh indeterminates") {
    EvalContext ctx;
    auto a = ctx.fresh_indeterminates(2, "a");
    REQUIRE(a.size() == 2);
    CHECK(a[0] != a[1]);
    CHECK(ctx.name(a[1].terms().begin()->first.factors()[0].first) == "a_1");
    CHECK(ctx.fresh_indeterminates(0, "b").empty());
    auto c1 = ctx.fresh_indeterminates(1, "c");
    auto c2 = ctx.fresh_indeterminates(1, "c");
    CHECK(c1[0] != c2[0]);
    CHECK(ctx.issued() == 4);
}

TEST_CASE("ring axioms on random polynomials") {
    Vars v;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng, v.x), q = random_poly(rng, v.x), r = random_poly(rng, v.x);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
        CHECK(poly_is_zero(p - p));
        Polynomial s = p * q;
        CHECK(s + Polynomial() == s);
        CHECK(s * Polynomial(1) == s);
        for (const auto& [m, c] : s.terms()) CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("linear algebra") {
    Matrix m = {{2, 1}, {1, 1}};
    Matrix inv = linalg::inverse(m);
    CHECK(linalg::multiply(m, inv) == linalg::identity(2));
    CHECK_THROWS_AS(linalg::inverse({{1, 2}, {2, 4}}), std::domain_error);
    auto ns = linalg::nullspace({{1, 2}, {2, 4}});
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vector{-2, 1});
    auto sol = linalg::solve({{1, 1}}, {Rational(1)});
    REQUIRE(sol);
    CHECK(sol->particular == Vector{1, 0});
    CHECK(sol->directions.size() == 1);
    CHECK_FALSE(linalg::solve({{1, 1}, {1, 1}}, {Rational(1), Rational(2)}));
    CHECK(linalg::rank({{1, 2}, {2, 4}, {0, 1}}) == 2);
    CHECK(linalg::in_span({{1, 0}}, {3, 0}));
    CHECK_FALSE(linalg::in_span({{1, 0}}, {0, 1}));
}
