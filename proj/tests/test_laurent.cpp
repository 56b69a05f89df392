// Exact scalar layer: rationals and Laurent polynomials in x.
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qpart/laurent.hpp"

using qpart::Laurent;
using qpart::Rational;

namespace {

Laurent poly(std::initializer_list<std::pair<long, long>> terms) {
    Laurent p;
    for (const auto& [e, c] : terms) p += Laurent::monomial(Rational(c), e);
    return p;
}

Laurent random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(-4, 4), coef(-5, 5);
    Laurent p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += Laurent::monomial(Rational(coef(rng)), expo(rng));
    return p;
}

} // namespace

TEST_CASE("rational helpers normalize and round-trip strings") {
    CHECK(qpart::rat_to_string(Rational(6, 4)) == "3/2");
    CHECK(qpart::rat_to_string(Rational(-6, 4)) == "-3/2");
    CHECK(qpart::rat_to_string(Rational(5)) == "5/1");
    CHECK(qpart::rat_to_pretty(Rational(5)) == "5");
    CHECK(qpart::rat_to_pretty(Rational(1, 3)) == "1/3");
    CHECK(qpart::rat_parse("3/2") == Rational(3, 2));
    CHECK(qpart::rat_parse("-7") == Rational(-7));
    CHECK(qpart::rat_parse(qpart::rat_to_string(Rational(-22, 6))) == Rational(-11, 3));
    CHECK_THROWS_AS(qpart::rat_parse("3/0"), qpart::ParseError);
    CHECK_THROWS_AS(qpart::rat_parse("7/-2"), qpart::ParseError);
}

TEST_CASE("addition prunes cancelled terms") {
    CHECK((poly({{1, 1}}) + poly({{1, -1}})).is_zero());
    CHECK(poly({{0, 1}, {-1, -1}}) + poly({{-1, 1}}) == poly({{0, 1}}));
    CHECK(poly({{2, 1}, {0, 2}}) + poly({{-3, 3}}) == poly({{2, 1}, {0, 2}, {-3, 3}}));
}

TEST_CASE("multiplication is the convolution product") {
    // (x - x^-1)(x + x^-1) = x^2 - x^-2
    CHECK(poly({{1, 1}, {-1, -1}}) * poly({{1, 1}, {-1, 1}}) == poly({{2, 1}, {-2, -1}}));
    CHECK(Laurent::xpow(-3) * Laurent::xpow(5) == Laurent::xpow(2));
    // (1 - 1/x)^2 = 1 - 2x^-1 + x^-2
    const Laurent a = poly({{0, 1}, {-1, -1}});
    CHECK(a * a == poly({{0, 1}, {-1, -2}, {-2, 1}}));
}

TEST_CASE("evaluation is exact and guards x = 0") {
    CHECK(poly({{-3, -2}}).eval(Rational(2)) == Rational(-1, 4));
    CHECK(poly({{0, 1}, {-1, -1}}).eval(Rational(1)) == Rational(0));
    CHECK_THROWS_AS(poly({{2, 1}, {-2, -1}}).eval(Rational(0)), qpart::EvalAtZero);
    // nonnegative exponents evaluate fine at zero
    CHECK(poly({{2, 3}, {0, 7}}).eval(Rational(0)) == Rational(7));
    CHECK(poly({{-2, 5}}).eval(Rational(1, 2)) == Rational(20));
}

TEST_CASE("ring axioms hold on random small-support polynomials") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 200; ++trial) {
        const Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism away from zero") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const Laurent a = random_poly(rng), b = random_poly(rng);
        int n = pick(rng);
        if (n == 0) n = 7;
        const Rational v(n);
        CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
        CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
    }
}

TEST_CASE("printing orders by descending exponent") {
    CHECK(Laurent::zero().to_string() == "0");
    CHECK(poly({{2, 1}, {-2, -1}}).to_string() == "x^2 - x^-2");
    CHECK(poly({{0, 1}, {-1, -2}}).to_string() == "1 - 2*x^-1");
    CHECK(Laurent::monomial(Rational(-3, 2), 1).to_string() == "-3/2*x");
}

TEST_CASE("JSON round trip keeps exponents and exact coefficients") {
    const Laurent a = poly({{3, 2}, {0, -7}, {-5, 1}});
    const auto j = a.to_json();
    CHECK(j.size() == 3);
    CHECK(j.at("-5") == "1/1");
    CHECK(Laurent::from_json(j) == a);
    CHECK(Laurent::from_json(Laurent::zero().to_json()).is_zero());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Laurent p = random_poly(rng);
        CHECK(Laurent::from_json(p.to_json()) == p);
    }
}
