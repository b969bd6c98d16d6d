#include <cmath>

#include "coeffpat/error.hpp"
#include "coeffpat/polytext.hpp"
#include "coeffpat/willson.hpp"
#include "doctest.h"
#include "reference/lambda_table.hpp"

using namespace coeffpat;

namespace {

FpPoly F2(const char* text) { return parse_poly(text, Prime(2)); }

// Brute-force r(2^k): nonzero coefficients over rows 0..2^k-1.
std::vector<BigInt> brute_counts(const FpPoly& f, std::size_t K) {
    std::vector<BigInt> out;
    for (std::size_t k = 0; k <= K; ++k) out.push_back(cumulative_count(f, std::uint64_t{1} << k, DigitQuery::total()));
    return out;
}

}  // namespace

TEST_CASE("1+x: two states, B = [[2,1],[1,2]], counts 3^k") {
    const TransferSystem full = build_transfer(F2("1+x"));
    CHECK(full.size() == 3);
    const TransferSystem sys = trim(full);
    REQUIRE(sys.size() == 2);
    std::int64_t sum = 0, diag = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        diag += sys.B(i, i);
        for (std::size_t j = 0; j < 2; ++j) sum += sys.B(i, j);
    }
    CHECK(diag == 4);
    CHECK(sum == 6);
    const auto c = transfer_counts(sys, 12);
    BigInt p3 = 1;
    for (std::size_t k = 0; k <= 12; ++k, p3 *= 3) CHECK(c[k] == p3);
}

TEST_CASE("untrimmed system shape") {
    for (const char* text : {"1+x", "1+x+x^2", "1+x+x^3", "1+x^2+x^3+x^4"}) {
        const FpPoly f = F2(text);
        const TransferSystem sys = build_transfer(f);
        CHECK(sys.size() == (std::size_t{1} << (f.degree() + 1)) - 1);
        // each state has four children (some may be the zero window); column sums <= 4
        for (std::size_t j = 0; j < sys.size(); ++j) {
            std::int64_t col = 0;
            for (std::size_t i = 0; i < sys.size(); ++i) col += sys.B(i, j);
            CHECK(col <= 4);
        }
        for (std::size_t i = 0; i < sys.size(); ++i)
            for (std::size_t j = 0; j < sys.size(); ++j) CHECK(sys.B(i, j) == sys.B0(i, j) + sys.B1(i, j));
    }
}

TEST_CASE("counts match brute force, trimmed and untrimmed") {
    for (const char* text : {"1+x", "1+x+x^2", "1+x+x^3", "1+x^2+x^3", "1+x+x^2+x^4", "x+x^3", "1+x+x^5+x^6"}) {
        const FpPoly f = F2(text);
        const auto want = brute_counts(f, 9);
        const TransferSystem full = build_transfer(f);
        const TransferSystem small = trim(full);
        CHECK(small.size() <= full.size());
        CHECK(transfer_counts(full, 9) == want);
        CHECK(transfer_counts(small, 9) == want);
        const CountCheck ck = verify_counts(small, 9);
        CHECK(ck.ok);
    }
}

TEST_CASE("Perron root of small cases") {
    SpectralResult one = perron(trim(build_transfer(F2("1+x"))));
    REQUIRE(one.exact.has_value());
    CHECK(*one.exact == 3);
    CHECK(one.lambda == 3);
    CHECK(one.dimension == doctest::Approx(std::log2(3.0)));

    SpectralResult two = perron(trim(build_transfer(F2("1+x+x^2"))));
    CHECK(two.lambda == doctest::Approx(1 + std::sqrt(5.0)).epsilon(1e-9));
    CHECK(zpoly::divide_exact(two.charpoly, zpoly::from_ints({-4, -2, 1})).has_value());
    CHECK(two.hi - two.lo <= make_rational(1, 1'000'000'000));
    CHECK(std::abs(two.ratio - two.lambda) / two.lambda < kRatioTolerance);

    SpectralResult three = minpoly_of_lambda(perron(trim(build_transfer(F2("1+x+x^3")))));
    CHECK(std::abs(three.lambda - 3.31142) < 5e-6);
    REQUIRE(three.degree.has_value());
    CHECK(*three.degree == 4);
    CHECK(zpoly::sign_at(*three.minpoly, three.lo) * zpoly::sign_at(*three.minpoly, three.hi) <= 0);
}

TEST_CASE("minimal polynomial of 1+x+x^4 has degree 5") {
    SpectralResult r = minpoly_of_lambda(perron(trim(build_transfer(F2("1+x+x^4")))));
    REQUIRE(r.degree.has_value());
    CHECK(*r.degree == 5);
    CHECK(zpoly::divide_exact(r.squarefree, *r.minpoly).has_value());
}

TEST_CASE("canonical forms") {
    CHECK(format_poly(canonicalize(F2("x+x^2")).canonical) == "1+x");
    CHECK(format_poly(canonicalize(F2("1+x^2")).canonical) == "1+x");
    CHECK(format_poly(canonicalize(F2("1+x^2+x^3")).canonical) == "1+x+x^3");
    CHECK(format_poly(canonicalize(F2("1+x^3+x^4")).canonical) == "1+x+x^4");
    CHECK(format_poly(canonicalize(F2("x^2+x^4+x^8")).canonical) == "1+x+x^3");
    const auto c = canonicalize(F2("x^3+x^5"));
    CHECK(format_poly(c.canonical) == "1+x");
    CHECK_FALSE(c.witnesses.empty());
    CHECK(canonicalize(F2("1+x+x^3")).witnesses.empty());
    CHECK(canonical_less(F2("1+x+x^3"), F2("1+x^2+x^3")));
    CHECK(canonical_less(F2("1+x^5"), F2("1+x+x^6")));
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_classes(2).size() == 2);
    CHECK(enumerate_classes(4).size() == 7);
    const auto all = enumerate_classes(6);
    REQUIRE(all.size() == 30);
    std::size_t perDeg[7] = {};
    for (const auto& c : all) ++perDeg[c.canonical.degree()];
    CHECK(perDeg[1] == 1);
    CHECK(perDeg[2] == 1);
    CHECK(perDeg[3] == 1);
    CHECK(perDeg[4] == 4);
    CHECK(perDeg[5] == 8);
    CHECK(perDeg[6] == 15);
    for (const auto& c : all) CHECK(reference::lambda_row(format_poly(c.canonical)) != nullptr);
}

TEST_CASE("eigenvalue bound") {
    CHECK(eigen_bound(1) == doctest::Approx(3));
    CHECK(eigen_bound(2) == doctest::Approx(std::sqrt(14.0)));
    double prev = 0;
    for (std::size_t d : {1, 2, 4, 8, 16, 1024}) {
        CHECK(eigen_bound(d) > prev);
        CHECK(eigen_bound(d) < 4);
        prev = eigen_bound(d);
    }
    CHECK(eigen_bound(3) == eigen_bound(4));
}

TEST_CASE("lambda is a similarity invariant") {
    for (const char* text : {"1+x+x^2", "1+x+x^3"}) {
        const FpPoly f = F2(text);
        const double base = perron(trim(build_transfer(f))).lambda;
        const FpPoly shifted = FpPoly::monomial(Prime(2), 2) * f;
        std::vector<Residue> rc(f.coeffs().rbegin(), f.coeffs().rend());
        const FpPoly reversed(Prime(2), rc);
        for (const FpPoly& g : {shifted, reversed, f * f, substitute_power(f, 2)}) {
            CHECK(perron(trim(build_transfer(g))).lambda == doctest::Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("degree <= 4 survey against the reference table") {
    const SurveyResult s = survey(4, 10);
    REQUIRE(s.rows.size() == 7);
    for (const auto& row : s.rows) {
        const auto* ref = reference::lambda_row(format_poly(row.poly));
        REQUIRE(ref != nullptr);
        CHECK(std::abs(row.spectrum.lambda - ref->lambda) <= 5e-6);
        REQUIRE(row.spectrum.degree.has_value());
        CHECK(*row.spectrum.degree == ref->degree);
        CHECK(row.boundOk);
        CHECK(row.countsOk);
        CHECK(row.spectrum.dimension >= 1);
        CHECK(row.spectrum.dimension <= 2);
    }
    CHECK(survey_tsv(s).rfind("poly\tlambda\tdegree\tdimension\tbound_ok\n", 0) == 0);
}

TEST_CASE("input checks") {
    CHECK_THROWS_AS(build_transfer(FpPoly(Prime(3), {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(build_transfer(FpPoly(Prime(2))), std::invalid_argument);
    CHECK_THROWS_AS(eigen_bound(0), std::invalid_argument);
}
