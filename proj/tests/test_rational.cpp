#include "qcvol/rational.hpp"

#include <doctest.h>

#include <random>

using namespace qcvol;

TEST_CASE("binomial values") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(41, 0) == 1);
    CHECK_THROWS_AS(binomial(3, 4), std::domain_error);
}

TEST_CASE("binomial row sums and symmetry") {
    for (unsigned long n = 0; n <= 200; ++n) {
        Int row_sum = 0;
        for (unsigned long k = 0; k <= n; ++k)
            row_sum += binomial(n, k);
        Int expected = 1;
        expected <<= n;
        CHECK(row_sum == expected);
    }
    for (unsigned long n = 0; n <= 60; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("rational arithmetic basics") {
    const Rational half19(19, 2);
    CHECK((half19 + (-half19)).is_zero());
    CHECK(Rational(55, 3) * Rational(3) == Rational(55));
    CHECK(Rational(25, 3) < Rational(19, 2)); // cross-multiplied: 50 < 57
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 40);
    for (int iter = 0; iter < 400; ++iter) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero())
            CHECK(a / a == Rational(1));
    }
}

TEST_CASE("parse and render round-trip") {
    CHECK(to_string(parse_rational("-49552967470135840983/5")) == "-49552967470135840983/5");
    CHECK(to_string(parse_rational("19")) == "19");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("+7/21")) == "1/3");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(parse_rational("0/9").is_zero());
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const char* text) {
        try {
            parse_rational(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("abc") == 0);
    CHECK(position_of("-") == 1);
    CHECK(position_of("12x") == 2);
    CHECK(position_of("1/") == 2);
    CHECK(position_of("1/0") == 2);
    CHECK(position_of("1/-2") == 2);
    CHECK(position_of("1/2/3") == 3);
    CHECK(position_of(" 1") == 0);
    CHECK(position_of("1 ") == 1);
}

TEST_CASE("random rationals round-trip through text") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99999);
    for (int iter = 0; iter < 300; ++iter) {
        const Rational v(num(rng), den(rng));
        CHECK(parse_rational(to_string(v)) == v);
    }
}
