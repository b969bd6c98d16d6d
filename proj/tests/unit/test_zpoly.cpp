#include <algorithm>
#include <random>

#include "coeffpat/zpoly.hpp"
#include "doctest.h"

using namespace coeffpat;
using zpoly::from_ints;

namespace {

ZPoly product(const std::vector<ZPoly>& fs) {
    ZPoly out = from_ints({1});
    for (const auto& f : fs) out = zpoly::mul(out, f);
    return out;
}

}  // namespace

TEST_CASE("content, primitive part, exact division") {
    ZPoly f = from_ints({-6, 0, 4});
    CHECK(zpoly::content(f) == 2);
    CHECK(zpoly::primitive_part(from_ints({6, 0, -4})) == from_ints({-3, 0, 2}));
    ZPoly a = zpoly::mul(from_ints({1, 1}), from_ints({-2, 0, 1}));
    CHECK(zpoly::divide_exact(a, from_ints({1, 1})) == from_ints({-2, 0, 1}));
    CHECK_FALSE(zpoly::divide_exact(a, from_ints({2, 1})).has_value());
}

TEST_CASE("gcd and squarefree part") {
    ZPoly g = from_ints({-4, -2, 1});
    ZPoly a = zpoly::mul(g, from_ints({1, 0, 1}));
    ZPoly b = zpoly::mul(g, from_ints({3, -7, 2}));
    CHECK(zpoly::gcd(a, b) == g);
    ZPoly rep = zpoly::mul(zpoly::mul(g, g), from_ints({-3, 1}));
    CHECK(zpoly::squarefree_part(rep) == zpoly::mul(g, from_ints({-3, 1})));
}

TEST_CASE("sign and evaluation") {
    ZPoly f = from_ints({-4, -2, 1});  // roots 1 +- sqrt 5
    CHECK(zpoly::sign_at(f, make_rational(3)) == -1);
    CHECK(zpoly::sign_at(f, make_rational(33, 10)) == 1);
    CHECK(zpoly::evaluate(f, make_rational(1, 2)) == make_rational(-19, 4));
    CHECK(zpoly::evaluate(f, 2.0) == doctest::Approx(-4.0));
}

TEST_CASE("shifted positivity certificate brackets the largest real root") {
    ZPoly f = from_ints({-4, -2, 1});
    // rho = 3.2360679...; a/2^e
    CHECK_FALSE(zpoly::shifted_all_positive(f, BigInt(3), 0));
    CHECK(zpoly::shifted_all_positive(f, BigInt(4), 0));
    CHECK_FALSE(zpoly::shifted_all_positive(f, BigInt(828), 8));  // 3.234375
    CHECK(zpoly::shifted_all_positive(f, BigInt(829), 8));        // 3.23828125
}

TEST_CASE("factorization of products of known irreducibles") {
    const std::vector<ZPoly> irreducibles{
        from_ints({1, 1}),          from_ints({-4, -2, 1}),      from_ints({1, 0, 1}),
        from_ints({-1, -1, 0, 1}), from_ints({2, 0, 0, 0, 1}),  from_ints({1, 1, 1, 1, 1}),
        from_ints({-3, 0, 2}),     from_ints({-1, -1, 0, 0, 0, 1}),
    };
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::vector<ZPoly> pick;
        for (const auto& g : irreducibles)
            if (rng() % 2) pick.push_back(g);
        if (pick.empty()) continue;
        const ZPoly f = product(pick);
        auto fac = zpoly::factor_squarefree(f);
        REQUIRE(fac.complete);
        CHECK(fac.factors.size() == pick.size());
        CHECK(product(fac.factors) == f);
        for (const auto& g : fac.factors)
            CHECK(std::find(irreducibles.begin(), irreducibles.end(), g) != irreducibles.end());
    }
}

TEST_CASE("Swinnerton-Dyer style polynomial stays irreducible") {
    // minimal polynomial of sqrt2 + sqrt3 + sqrt5: splits into many factors mod every prime
    ZPoly f = from_ints({576, 0, -960, 0, 352, 0, -40, 0, 1});
    auto fac = zpoly::factor_squarefree(f);
    REQUIRE(fac.complete);
    CHECK(fac.factors.size() == 1);
    CHECK(fac.factors[0] == f);
}

TEST_CASE("work cap reports an incomplete factorization") {
    ZPoly f = from_ints({576, 0, -960, 0, 352, 0, -40, 0, 1});
    auto fac = zpoly::factor_squarefree(f, 1);
    CHECK_FALSE(fac.complete);
    CHECK(product(fac.factors) == f);
}

TEST_CASE("text form") {
    CHECK(zpoly::to_string(from_ints({-4, -2, 1})) == "x^2 - 2x - 4");
}
