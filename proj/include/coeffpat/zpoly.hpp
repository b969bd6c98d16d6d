#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"

namespace coeffpat {

/// Integer polynomial, low degree first; trimmed (no trailing zeros).
using ZPoly = std::vector<BigInt>;

namespace zpoly {

ZPoly from_ints(std::initializer_list<long> coeffs);
void trim(ZPoly& f);
long degree(const ZPoly& f) noexcept;
const BigInt& lead(const ZPoly& f);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const BigInt& s);
ZPoly derivative(const ZPoly& f);

BigInt content(const ZPoly& f);
/// f / content(f), sign chosen so the leading coefficient is positive.
ZPoly primitive_part(const ZPoly& f);

/// q with a = q b, if b divides a in Z[x].
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient (modular, CRT over 62-bit primes).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Product of the distinct irreducible factors, primitive, positive leading coefficient.
ZPoly squarefree_part(const ZPoly& f);

/// Sign of f(x) at a rational point.
int sign_at(const ZPoly& f, const Rational& x);
Rational evaluate(const ZPoly& f, const Rational& x);
double evaluate(const ZPoly& f, double x);

/// True iff every coefficient of f(x + a/2^e) is positive (f primitive with
/// positive leading coefficient). For a polynomial whose roots all have real
/// part at most its largest real root rho, this holds exactly when a/2^e > rho.
bool shifted_all_positive(const ZPoly& f, const BigInt& a, unsigned e);

struct Factorization {
    std::vector<ZPoly> factors;  ///< primitive irreducible, positive leading coefficient
    bool complete = false;       ///< false when the work cap was hit
    std::uint64_t work = 0;      ///< trial divisions spent in recombination
};

/// Factors a squarefree primitive polynomial over the integers: reduction mod
/// a small prime, Cantor-Zassenhaus, multifactor Hensel lifting, and subset
/// recombination with trial division. Hitting workCap returns complete=false
/// with the factors found so far plus the unfactored remainder.
Factorization factor_squarefree(const ZPoly& f, std::uint64_t workCap = 1'000'000);

std::string to_string(const ZPoly& f, char var = 'x');

}  // namespace zpoly

}  // namespace coeffpat
