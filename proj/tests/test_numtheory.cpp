#include <doctest.h>

#include <stdexcept>

#include "hypcert/numtheory.hpp"
#include "hypcert/oracles.hpp"

using namespace hypcert;
using namespace hypcert::numtheory;

TEST_CASE("mobius values and domain") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK_THROWS_AS(mobius(0), std::domain_error);
}

TEST_CASE("padic_val") {
    CHECK(padic_val(3, 18) == 2);
    CHECK(padic_val(2, 7) == 0);
    CHECK(padic_val(5, 250) == 3);
    CHECK(padic_val(2, -24) == 3);
    CHECK_THROWS_AS(padic_val(3, 0), std::domain_error);
    CHECK_THROWS_AS(padic_val(4, 12), std::domain_error);
}

TEST_CASE("witt values against the Lyndon oracle") {
    CHECK(witt(2, 1) == 2);
    CHECK(witt(2, 6) == 9);
    CHECK(witt(3, 4) == 18);

    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 9; ++k)
            CHECK(witt(n, k) == BigInt(oracles::lyndon_count(n, k)));

    CHECK_THROWS_AS(witt(0, 3), std::domain_error);
    CHECK_THROWS_AS(witt(2, 0), std::domain_error);
}

TEST_CASE("witt inner sum divisibility over a grid") {
    // witt() itself throws if the Mobius sum is not divisible by k.
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 40; ++k)
            CHECK_NOTHROW(witt(n, k));
}

TEST_CASE("witt growth ratio") {
    CHECK(witt_growth_ratio(2, 1) == Rational(1));
    CHECK(witt_growth_ratio(2, 6) == Rational(27, 32));

    // The lower bound is attained at k = 2 (W_2(2) = 1) and strict beyond.
    CHECK(witt_growth_ratio(2, 2) == Rational(1, 2));
    for (int k = 3; k <= 40; ++k) {
        Rational ratio = witt_growth_ratio(2, k);
        CHECK(ratio > Rational(1, 2));
        CHECK(ratio < Rational(1));
    }
    CHECK(witt_growth_ratio(2, 30) > Rational(999, 1000));
}

TEST_CASE("adams m-function valuations") {
    CHECK(adams_m_valuation(3, 4) == 1);
    CHECK(adams_m_valuation(2, 2) == 3);
    CHECK(adams_m_valuation(5, 8) == 1);

    // t = p^{r-1}(p-1) gives valuation exactly r.
    for (long long p : {3LL, 5LL, 7LL})
        for (long long r = 1; r <= 3; ++r) {
            long long t = p - 1;
            for (long long i = 1; i < r; ++i)
                t *= p;
            CHECK(adams_m_valuation(p, 2 * t) == r);
        }

    CHECK_THROWS_AS(adams_m_valuation(5, 6), std::domain_error); // (p-1) does not divide
    CHECK_THROWS_AS(adams_m_valuation(3, 3), std::domain_error); // odd argument
    CHECK_THROWS_AS(adams_m_valuation(6, 4), std::domain_error); // composite p
}

TEST_CASE("binomial and pow_int basics") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(pow_int(2, 40) == BigInt("1099511627776"));
}
