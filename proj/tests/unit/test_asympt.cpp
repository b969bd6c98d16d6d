#include <cmath>

#include "coeffpat/asympt.hpp"
#include "doctest.h"

using namespace coeffpat;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// the second route for the piece-2 vertex value
Rational k2_alternative(long p) {
    const Rational P = p;
    const Rational d = 7 * P * P * P - 8 * P * P - 9 * P + 18;
    const Rational t = 3 * P * P - 7 * P + 6;
    Rational k = -(P - 4) * (P - 1) * (P - 1) / 4 + (P + 1) * (P - 1) * t * t / (4 * d);
    k.canonicalize();
    return k;
}

}  // namespace

TEST_CASE("limit function examples") {
    const auto L3 = limit_function(Family::one_plus_x(3));
    CHECK(L3.pieces().size() == 2);
    CHECK(L3.pieces()[0](Q(1, 3)) == Q(7, 2));
    CHECK(L3(Q(1, 3)) == Q(7, 2));
    const auto L5 = limit_function(Family::one_plus_x(5));
    CHECK(L5(Q(1, 5)) == 12);
    CHECK(sgn(L5.pieces()[0].A) == 0);
    CHECK(L5.pieces()[0].B == 20);
    CHECK(L5.pieces()[0].C == 8);
    CHECK(L5(Q(1, 3)) == Q(44, 3));
    const auto Lm = limit_function(Family::one_plus_x_plus_x2_mod2());
    CHECK(Lm(Q(3, 5)) == Q(7, 5));
    CHECK(limit_function(Family::one_plus_x(2))(Q(3, 4)) == 1);
}

TEST_CASE("continuity and periodicity") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
        const auto L = limit_function(Family::one_plus_x(p));
        CHECK(L.is_continuous());
        CHECK(L.is_periodic());
        CHECK(L(Q(1, 2)) == L(Q(static_cast<long>(p), 2)));
    }
    const auto Lm = limit_function(Family::one_plus_x_plus_x2_mod2());
    CHECK(Lm.is_continuous());
    CHECK(Lm.is_periodic());
}

TEST_CASE("extrema examples and agreement with vertex analysis") {
    auto e3 = extrema(Family::one_plus_x(3));
    CHECK(e3.inf == Q(17, 5));
    CHECK(e3.argInf == Q(4, 5));
    CHECK(e3.sup == Q(11, 3));
    CHECK(e3.argSup == Q(4, 9));
    auto e5 = extrema(Family::one_plus_x(5));
    CHECK(e5.inf == Q(59, 5));
    CHECK(e5.sup == Q(421, 27));
    auto em = extrema(Family::one_plus_x_plus_x2_mod2());
    CHECK(em.inf == Q(39, 28));
    CHECK(em.argInf == Q(6, 7));
    CHECK(em.sup == Q(7, 5));
    CHECK(em.argSup == Q(3, 5));
    std::vector<Family> fams{Family::one_plus_x(2), Family::one_plus_x_plus_x2_mod2()};
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) fams.push_back(Family::one_plus_x(p));
    for (const auto& f : fams) {
        const auto a = extrema(f);
        const auto b = extrema_of(limit_function(f));
        CHECK(a.inf == b.inf);
        CHECK(a.sup == b.sup);
        CHECK(a.argInf == b.argInf);
        CHECK(a.argSup == b.argSup);
    }
}

TEST_CASE("vertex value has a second closed form") {
    for (long p : {3l, 5l, 7l, 11l, 13l}) {
        CHECK(extrema(Family::one_plus_x(static_cast<std::uint32_t>(p))).sup == k2_alternative(p));
    }
}

TEST_CASE("empirical ratios") {
    const auto r2 = recursion_1px(2);
    CHECK(empirical_ratio(r2, Q(1), 10) == doctest::Approx((1024.0 * 1024 - 1024 + 2) / (1024.0 * 1024)));
    CHECK(std::abs(empirical_ratio(recursion_1px(3), Q(4, 9), 12) - 11.0 / 3) <= 0.02);
    CHECK(std::abs(empirical_ratio(recursion_1xx2_mod2(), Q(6, 7), 12) - 39.0 / 28) <= 0.02);
}

TEST_CASE("empirical ratios converge toward L") {
    for (std::uint32_t p : {3u, 5u}) {
        const auto L = limit_function(Family::one_plus_x(p));
        const auto rec = recursion_1px(p);
        for (long j = 1; j <= 8; ++j) {
            const Rational lo = make_rational(1, p);
            const Rational x = lo + Q(j, 8) * (1 - lo);
            const double target = L(x).get_d();
            const double e8 = std::abs(empirical_ratio(rec, x, 8) - target);
            const double e12 = std::abs(empirical_ratio(rec, x, 12) - target);
            CHECK(e12 <= 0.02);
            CHECK(e12 <= e8 + 1e-3);
        }
    }
}

TEST_CASE("oscillation grid") {
    const auto rows3 = oscillation_table(recursion_1px(3), 8, 16);
    for (std::size_t i = 1; i < rows3.size(); ++i) CHECK(rows3[i - 1].n <= rows3[i].n);
    for (const auto& r : rows3) {
        if (r.n >= 59049) {
            CHECK(r.ratio >= 17.0 / 5 - 0.05);
            CHECK(r.ratio <= 11.0 / 3 + 0.05);
        }
    }
    const auto rows2 = oscillation_table(recursion_1px(2), 4, 20);
    for (const auto& r : rows2) {
        if (r.n > 16) CHECK(std::abs(r.ratio - 1) <= 2 / r.n.get_d());
    }
    const auto rowsM = oscillation_table(recursion_1xx2_mod2(), 16, 18);
    double lo = 10, hi = 0;
    for (const auto& r : rowsM) {
        if (r.n < 4096) continue;
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
    }
    CHECK(lo >= 39.0 / 28 - 0.01);
    CHECK(hi <= 7.0 / 5 + 0.01);
    CHECK(hi - lo > 0.004);
    const auto csv = oscillation_csv(oscillation_table(recursion_1px(2), 1, 2));
    CHECK(csv == "logn,ratio\n1,1\n2,0.875\n");
}
