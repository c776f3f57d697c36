#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbfrob/rational.hpp"

using hilbfrob::Rational;

TEST_CASE("basic arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK((-a).str() == "-1/2");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("3/4/5"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("3/"));
}

TEST_CASE("promotion past 64 bits stays exact") {
    // 2^80 via repeated multiplication
    Rational big(1);
    for (int i = 0; i < 80; ++i) big *= Rational(2);
    mpq_class expect(1);
    for (int i = 0; i < 80; ++i) expect *= 2;
    CHECK(big.to_mpq() == expect);
    // and back down through division
    for (int i = 0; i < 80; ++i) big /= Rational(2);
    CHECK(big == Rational(1));
    CHECK(big.num_ll() == 1);
}

TEST_CASE("randomized cross-check against gmp") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> num(-1000000000LL, 1000000000LL);
    std::uniform_int_distribution<long long> den(1, 1000000000LL);
    Rational acc(0);
    mpq_class ref(0);
    for (int step = 0; step < 3000; ++step) {
        Rational r(num(rng), den(rng));
        mpq_class q(r.to_mpq());
        switch (step % 4) {
            case 0:
                acc += r;
                ref += q;
                break;
            case 1:
                acc -= r;
                ref -= q;
                break;
            case 2:
                acc *= r;
                ref *= q;
                break;
            default:
                acc /= r;
                ref /= q;
                break;
        }
        ref.canonicalize();
    }
    CHECK(acc.to_mpq() == ref);
}

TEST_CASE("factorial and binomial") {
    CHECK(hilbfrob::factorial(6) == Rational(720));
    CHECK(hilbfrob::binomial(10, 3) == Rational(120));
    CHECK(hilbfrob::binomial(24 + 7, 8) == Rational(7888725));
    CHECK(hilbfrob::binomial(5, 9) == Rational(0));
}
