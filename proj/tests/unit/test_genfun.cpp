#include "coeffpat/blocks.hpp"
#include "coeffpat/genfun.hpp"
#include "doctest.h"

using namespace coeffpat;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// the p=3 form with the z^{3p^i} terms telescoped away:
// (1 + 3z^2 - 2z^3 + 8z^2 sum(z^{3^i} - z^{2*3^i})) / (1-z)^3
std::vector<BigInt> p3_display_form(std::size_t N) {
    std::vector<BigInt> num(N + 1, 0);
    num[0] = 1;
    if (N >= 2) num[2] += 3;
    if (N >= 3) num[3] -= 2;
    for (std::size_t q = 1; 2 + q <= N; q *= 3) {
        num[2 + q] += 8;
        if (2 + 2 * q <= N) num[2 + 2 * q] -= 8;
    }
    for (int pass = 0; pass < 3; ++pass) {
        for (std::size_t n = 1; n <= N; ++n) num[n] += num[n - 1];
    }
    return num;
}

}  // namespace

TEST_CASE("series examples") {
    CHECK(series_1px(3, 5).coeffs == big({1, 3, 9, 25, 43, 71}));
    CHECK(series_1px(2, 4).coeffs == big({1, 2, 4, 8, 14}));
    CHECK(series_1px(5, 3).coeffs == big({1, 5, 25, 101}));
    CHECK(series_1px(7, 0).coeffs == big({1}));
    CHECK(series_1xx2(9).coeffs == big({1, 2, 4, 8, 14, 25, 36, 53, 70, 92}));
    CHECK(series_1xx2(0).coeffs == big({1}));
    CHECK(series_1xx2(12).coeffs.back() == 170);
}

TEST_CASE("series agree with the recursion engines") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        CHECK(series_1px(p, 2000).coeffs == recursion_prefix(recursion_1px(p), 2000));
    }
    CHECK(series_1xx2(2000).coeffs == recursion_prefix(recursion_1xx2_mod2(), 2000));
    for (std::size_t n = 1; n <= 2000; n += 13) {
        CHECK(series_1px(2, 2000)[n] == BigInt(static_cast<long>(n * n - n + 2)));
    }
}

TEST_CASE("p=3 specialization matches the telescoped display") {
    CHECK(series_1px(3, 3000).coeffs == p3_display_form(3000));
}

TEST_CASE("residual of 1+x mod 2") {
    const auto rep = functional_residual(series_1px(2, 256), int_poly({1, -3, 3, -1}), 2);
    CHECK(rep.status == ResidualStatus::Bounded);
    REQUIRE(rep.polynomialDegreeBound);
    CHECK(*rep.polynomialDegreeBound == 6);
    std::vector<BigInt> head(rep.residual.coeffs.begin(), rep.residual.coeffs.begin() + 7);
    CHECK(head == big({0, -1, 2, 1, -1, 0, -1}));
}

TEST_CASE("wrong multiplier gives no bound") {
    const auto rep = functional_residual(series_1xx2(4096), int_poly({1, -2, 1}), 2);
    CHECK(rep.status == ResidualStatus::None);
    CHECK_FALSE(rep.polynomialDegreeBound);
}

TEST_CASE("short prefixes are inconclusive") {
    const auto rep = functional_residual(series_1px(2, 5), int_poly({1, -3, 3, -1}), 2);
    CHECK(rep.status == ResidualStatus::Inconclusive);
}

TEST_CASE("shifted multiplier gives finite residuals") {
    // r(z) = z^-s (1-z)^3 for 1+x at odd p, z^-3 (1-z^2)(1-z)^2 for 1+x+x^2
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto rep = functional_residual(series_1px(p, 4096), int_poly({1, -3, 3, -1}), p, 2);
        CHECK(rep.status == ResidualStatus::Bounded);
        const auto plain = functional_residual(series_1px(p, 4096), int_poly({1, -3, 3, -1}), p);
        CHECK(plain.status == ResidualStatus::None);
    }
    const auto rep = functional_residual(series_1xx2(4096), int_poly({1, -2, 0, 2, -1}), 2, 3);
    CHECK(rep.status == ResidualStatus::Bounded);
}

TEST_CASE("residual is additive in the series") {
    const auto a = series_1px(3, 300);
    const auto b = series_1px(5, 300);
    SeriesCoeffs sum;
    for (std::size_t i = 0; i <= 300; ++i) sum.coeffs.push_back(a[i] + b[i]);
    const auto r = int_poly({1, -1, 2});
    const auto ra = functional_residual(a, r, 3).residual;
    const auto rb = functional_residual(b, r, 3).residual;
    const auto rs = functional_residual(sum, r, 3).residual;
    for (std::size_t i = 0; i <= 300; ++i) CHECK(rs[i] == ra[i] + rb[i]);
}

TEST_CASE("csv") {
    CHECK(series_csv(series_1px(2, 2)) == "n,a_n\n0,1\n1,2\n2,4\n");
}
