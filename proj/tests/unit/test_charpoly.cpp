#include <random>

#include "coeffpat/charpoly.hpp"
#include "doctest.h"

using namespace coeffpat;
using zpoly::from_ints;

TEST_CASE("2x2 and triangular matrices") {
    IntMatrix A(2);
    A(0, 0) = 2, A(0, 1) = 1, A(1, 0) = 1, A(1, 1) = 2;
    CHECK(charpoly(A) == from_ints({3, -4, 1}));
    IntMatrix T(3);
    T(0, 0) = 1, T(0, 1) = 5, T(1, 1) = -2, T(1, 2) = 7, T(2, 2) = 3;
    CHECK(charpoly(T) == zpoly::mul(zpoly::mul(from_ints({-1, 1}), from_ints({2, 1})), from_ints({-3, 1})));
}

TEST_CASE("empty and zero matrices") {
    CHECK(charpoly(IntMatrix(0)) == from_ints({1}));
    CHECK(charpoly(IntMatrix(3)) == from_ints({0, 0, 0, 1}));
}

TEST_CASE("Bareiss determinant") {
    std::vector<std::vector<BigInt>> M{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(bareiss_determinant(M) == 4);
    std::vector<std::vector<BigInt>> S{{0, 1}, {1, 0}};
    CHECK(bareiss_determinant(S) == -1);
    std::vector<std::vector<BigInt>> Z{{1, 2}, {2, 4}};
    CHECK(bareiss_determinant(Z) == 0);
}

TEST_CASE("modular charpoly agrees with interpolated determinants") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + rng() % 14;
        IntMatrix A(n);
        const long range = t < 15 ? 3 : 2000;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
        const ZPoly cp = charpoly(A);
        CHECK(cp == charpoly_interpolated(A));
        CHECK(zpoly::degree(cp) == static_cast<long>(n));
        long trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += A(i, i);
        CHECK(cp[n - 1] == -trace);
    }
}

TEST_CASE("large sparse 0/1/2 matrix") {
    std::mt19937_64 rng(5);
    const std::size_t n = 60;
    IntMatrix A(n);
    for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k < 4; ++k) ++A(rng() % n, j);
    CHECK(charpoly(A) == charpoly_interpolated(A));
}
