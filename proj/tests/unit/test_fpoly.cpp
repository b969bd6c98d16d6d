#include <random>

#include "coeffpat/fpoly.hpp"
#include "doctest.h"

using namespace coeffpat;

namespace {

FpPoly P(std::uint32_t p, std::vector<Residue> c) { return FpPoly(Prime(p), std::move(c)); }

// repeated multiplication, no base-p shortcut
FpPoly naive_pow(const FpPoly& f, std::uint64_t k) {
    FpPoly acc = FpPoly::one(f.prime());
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * f;
    return acc;
}

std::string digit_string(const Row& r) {
    std::string s;
    for (Residue d : r.digits) s += static_cast<char>('0' + d);
    return s;
}

// Lucas: C(n,k) is odd iff k & ~n == 0
std::string pascal_row_mod2(std::uint64_t n) {
    std::string s;
    for (std::uint64_t k = 0; k <= n; ++k) s += ((k & ~n) == 0) ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("prime construction") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(65537).value() == 65537);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(91), std::invalid_argument);
    CHECK(is_prime(4294967291ull));
    std::vector<bool> sieve(2000, true);
    for (std::uint64_t i = 2; i < 2000; ++i) {
        if (sieve[i]) {
            for (std::uint64_t j = i * i; j < 2000; j += i) sieve[j] = false;
        }
        CHECK(is_prime(i) == sieve[i]);
    }
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("canonical form trims and reduces") {
    auto f = P(3, {4, 0, 3, 0});
    CHECK(f.coeffs() == std::vector<Residue>{1});
    CHECK(P(2, {2, 4}).is_zero());
    CHECK(P(2, {}).degree() == -1);
    CHECK(P(5, {0, 0, 1}).valuation() == 2);
}

TEST_CASE("poly_pow examples") {
    CHECK(poly_pow(P(2, {1, 1}), 2) == P(2, {1, 0, 1}));
    CHECK(poly_pow(P(2, {1, 1, 1}), 3) == P(2, {1, 1, 0, 1, 0, 1, 1}));
    CHECK(poly_pow(P(3, {1, 1}), 3) == P(3, {1, 0, 0, 1}));
    CHECK(poly_pow(P(7, {3, 5}), 0) == FpPoly::one(Prime(7)));
}

TEST_CASE("poly_pow agrees with repeated multiplication") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Residue> c(1 + rng() % 5);
            for (auto& x : c) x = rng() % p;
            c.back() = 1 + rng() % (p - 1);
            const FpPoly f(Prime(p), c);
            for (std::uint64_t k : {1ull, 2ull, 5ull, 13ull, 30ull}) {
                CHECK(poly_pow(f, k) == naive_pow(f, k));
            }
        }
    }
}

TEST_CASE("Frobenius property f^(kp) = f^k(x^p)") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Residue> c(2 + rng() % 4);
            for (auto& x : c) x = rng() % p;
            c.back() = 1;
            const FpPoly f(Prime(p), c);
            for (std::uint64_t k = 0; k < 50; k += 7) {
                const FpPoly fk = poly_pow(f, k);
                CHECK(poly_pow(f, k * p) == substitute_power(fk, p));
                CHECK(fk.degree() == static_cast<long>(k) * f.degree());
            }
        }
    }
}

TEST_CASE("row digits") {
    CHECK(digit_string(row_digits(P(2, {1, 1}), 4)) == "10001");
    CHECK(digit_string(row_digits(P(2, {1, 1}), 3)) == "1111");
    CHECK(digit_string(row_digits(P(5, {2, 1, 3}), 0)) == "1");
    CHECK_THROWS_AS(row_digits(P(2, {}), 1), std::invalid_argument);
    // x*(1+x): leading zeros keep length k*deg+1
    CHECK(digit_string(row_digits(P(2, {0, 1, 1}), 2)) == "00101");
    for (std::uint64_t n = 0; n < 70; ++n) {
        CHECK(digit_string(row_digits(P(2, {1, 1}), n)) == pascal_row_mod2(n));
    }
}

TEST_CASE("row iterator matches row_digits") {
    const auto f = P(5, {2, 1, 1});
    RowIterator it(f);
    for (std::uint64_t k = 0; k < 40; ++k) {
        CHECK(it.index() == k);
        CHECK(it.digits() == row_digits(f, k).digits);
        it.advance();
    }
}

TEST_CASE("counts") {
    const auto f = P(2, {1, 1});
    CHECK(count_coeff(f, 4, DigitQuery::total()) == 2);
    CHECK(count_coeff(f, 0, DigitQuery::total()) == 1);
    CHECK(count_coeff(f, 3, DigitQuery::total()) == 4);
    CHECK(cumulative_count(f, 4, DigitQuery::total()) == 9);
    CHECK(cumulative_count(f, 0, DigitQuery::total()) == 0);
    CHECK(cumulative_count(f, 1, DigitQuery::total()) == 1);
    CHECK(cumulative_count(P(2, {1, 1, 1}), 2, DigitQuery::total()) == 4);
    CHECK_THROWS_AS(DigitQuery::digit(0), std::invalid_argument);
    CHECK_THROWS_AS(count_coeff(P(3, {1, 1}), 1, DigitQuery::digit(3)), std::invalid_argument);
    BigInt three = 1;
    for (std::uint64_t k = 0; k <= 12; ++k) {
        CHECK(cumulative_count(f, 1ull << k, DigitQuery::total()) == three);
        three *= 3;
    }
}

TEST_CASE("count table consistency") {
    const auto f = P(5, {1, 2, 1, 3});
    const auto t = count_table(f, 60);
    REQUIRE(t.rows() == 60);
    for (std::uint64_t k = 0; k < 60; ++k) {
        std::uint64_t sum = 0;
        for (Residue a = 1; a < 5; ++a) {
            CHECK(t.perDigit[k][a - 1] == count_coeff(f, k, DigitQuery::digit(a)));
            sum += t.perDigit[k][a - 1];
        }
        CHECK(sum == t.total[k]);
        CHECK(t.cumulativeTotal[k + 1] >= t.cumulativeTotal[k]);
    }
    CHECK(t.cumulativeTotal[60] == cumulative_count(f, 60, DigitQuery::total()));
    CHECK(t.cumulativeDigit[60][2] == cumulative_count(f, 60, DigitQuery::digit(3)));
}
