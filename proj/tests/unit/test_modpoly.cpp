#include <random>

#include "coeffpat/modpoly.hpp"
#include "doctest.h"

using namespace coeffpat;

namespace {

ModPoly M(std::vector<std::uint64_t> c) {
    ModPoly p{std::move(c)};
    p.trim();
    return p;
}

ModPoly product(const ModField& F, const std::vector<ModPoly>& fs) {
    ModPoly out = M({1});
    for (const auto& f : fs) out = modpoly::mul(F, out, f);
    return out;
}

// brute force: f has no root and no monic divisor of degree <= deg/2
bool irreducible_brute(const ModField& F, const ModPoly& f) {
    const long n = f.degree();
    for (long d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint64_t> c(d + 1, 0);
        c[d] = 1;
        while (true) {
            ModPoly g = M(c);
            if (modpoly::rem(F, f, g).is_zero()) return false;
            long i = 0;
            while (i < d && ++c[i] == F.m) c[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("field arithmetic and inverses") {
    const ModField F{1'000'003};
    for (std::uint64_t a : {1ull, 2ull, 999'999ull, 123'456ull}) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.reduce(BigInt(-1)) == F.m - 1);
    CHECK(F.lift(F.m - 1) == -1);
    CHECK(F.pow(3, F.m - 1) == 1);
    CHECK_THROWS(F.inv(0));
}

TEST_CASE("division identity") {
    const ModField F{101};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> a(1 + rng() % 12), b(1 + rng() % 6);
        for (auto& x : a) x = rng() % F.m;
        for (auto& x : b) x = rng() % F.m;
        b.back() = 1 + rng() % (F.m - 1);
        ModPoly A = M(a), Bp = M(b), q, r;
        modpoly::divrem(F, A, Bp, q, r);
        CHECK(r.degree() < Bp.degree());
        CHECK(modpoly::add(F, modpoly::mul(F, q, Bp), r) == A);
    }
}

TEST_CASE("extended gcd") {
    const ModField F{97};
    ModPoly a = modpoly::mul(F, M({1, 1}), M({3, 0, 1}));
    ModPoly b = modpoly::mul(F, M({1, 1}), M({5, 1}));
    ModPoly s, t;
    ModPoly g = modpoly::ext_gcd(F, a, b, s, t);
    CHECK(g == M({1, 1}));
    CHECK(modpoly::add(F, modpoly::mul(F, s, a), modpoly::mul(F, t, b)) == g);
}

TEST_CASE("x^p = x modulo x^p - x") {
    const ModField F{13};
    std::vector<std::uint64_t> c(14, 0);
    c[13] = 1;
    c[1] = F.neg(1);
    ModPoly f = M(c);
    CHECK(modpoly::powmod(F, modpoly::x_power(F, 1), BigInt(13), f) == modpoly::x_power(F, 1));
}

TEST_CASE("factorization mod p against brute-force irreducibility") {
    std::mt19937_64 rng(0x5eed);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        const ModField F{p};
        for (int t = 0; t < 20; ++t) {
            std::vector<std::uint64_t> c(2 + rng() % 7);
            for (auto& x : c) x = rng() % p;
            c.back() = 1;
            ModPoly f = M(c);
            ModPoly d = modpoly::derivative(F, f);
            if (d.is_zero() || modpoly::gcd(F, f, d).degree() > 0) continue;
            auto fs = modpoly::factor_squarefree(F, f, rng);
            CHECK(product(F, fs) == f);
            for (const auto& g : fs) {
                CHECK(g.lead() == 1);
                CHECK(irreducible_brute(F, g));
            }
            std::size_t total = 0;
            for (const auto& [g, deg] : modpoly::distinct_degree(F, f)) {
                CHECK(g.degree() % static_cast<long>(deg) == 0);
                total += g.degree();
            }
            CHECK(total == static_cast<std::size_t>(f.degree()));
        }
    }
}
