#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coeffpat/bigint.hpp"

namespace coeffpat {

/// Arithmetic modulo a prime m < 2^63.
struct ModField {
    std::uint64_t m;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + m - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a ? m - a : 0; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error on 0.
    std::uint64_t inv(std::uint64_t a) const;
    /// Residue of a (any sign) mod m.
    std::uint64_t reduce(const BigInt& a) const;
    /// Symmetric lift in (-m/2, m/2].
    BigInt lift(std::uint64_t a) const;
};

/// Dense polynomial over Z/m, low degree first, trimmed.
struct ModPoly {
    std::vector<std::uint64_t> c;

    long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    std::uint64_t lead() const noexcept { return c.empty() ? 0 : c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

namespace modpoly {

ModPoly x_power(const ModField& F, std::size_t k);
ModPoly add(const ModField& F, const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModField& F, const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModField& F, const ModPoly& a, const ModPoly& b);
ModPoly scale(const ModField& F, const ModPoly& a, std::uint64_t s);
/// a = q b + r, deg r < deg b. Throws on b = 0.
void divrem(const ModField& F, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly rem(const ModField& F, const ModPoly& a, const ModPoly& b);
ModPoly monic(const ModField& F, const ModPoly& a);
/// Monic gcd (zero if both are zero).
ModPoly gcd(const ModField& F, ModPoly a, ModPoly b);
/// s a + t b = g with g monic.
ModPoly ext_gcd(const ModField& F, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);
ModPoly derivative(const ModField& F, const ModPoly& a);
/// base^e mod f.
ModPoly powmod(const ModField& F, const ModPoly& base, const BigInt& e, const ModPoly& f);

/// Distinct-degree factorization of a monic squarefree f: pairs (product of
/// all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(const ModField& F, const ModPoly& f);

/// Equal-degree splitting (Cantor-Zassenhaus), odd prime modulus.
std::vector<ModPoly> equal_degree(const ModField& F, const ModPoly& f, std::size_t d, std::mt19937_64& rng);

/// Monic irreducible factors of a monic squarefree f over Z/p, p odd.
std::vector<ModPoly> factor_squarefree(const ModField& F, const ModPoly& f, std::mt19937_64& rng);

}  // namespace modpoly

}  // namespace coeffpat
