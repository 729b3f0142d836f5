#include <random>

#include "doctest.h"
#include "equichow/rational.hpp"

using namespace equichow;

TEST_CASE("BigInt basic arithmetic and printing") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-1).str() == "-1");
    CHECK((BigInt(1000000007) * BigInt(998244353)).str() == "998244359987710471");
    CHECK(BigInt::from_string("-12345678901234567890").str() == "-12345678901234567890");
    BigInt a = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
    BigInt b = BigInt::from_string("18446744073709551616");                     // 2^64
    CHECK(a / b == b);
    CHECK((a % b).is_zero());
    CHECK((a - BigInt(1)).str() == "340282366920938463463374607431768211455");
}

TEST_CASE("BigInt divmod identity against native arithmetic") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 4000; ++iter) {
        long long x = static_cast<long long>(rng() % 2000000000000ULL) - 1000000000000LL;
        long long y = 0;
        while (y == 0) y = static_cast<long long>(rng() % 2000000ULL) - 1000000;
        BigInt q, r;
        BigInt::divmod(BigInt(x), BigInt(y), q, r);
        CHECK(q.to_ll() == x / y);
        CHECK(r.to_ll() == x % y);
    }
}

TEST_CASE("BigInt divmod identity on large operands") {
    std::mt19937_64 rng(999);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        return rng() % 2 ? v : -v;
    };
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("gcd and rational reduction") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5) == Rational());
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
    CHECK((Rational(1, 7) / Rational(2, 21)).str() == "3/2");
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational::from_string("-22/7").str() == "-22/7");
    CHECK_THROWS(BigInt::from_string(""));
    CHECK_THROWS(BigInt::from_string("12a"));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(777);
    auto rnd = [&]() {
        long long n = static_cast<long long>(rng() % 2001) - 1000;
        long long d = 1 + static_cast<long long>(rng() % 50);
        return Rational(n, d);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}
