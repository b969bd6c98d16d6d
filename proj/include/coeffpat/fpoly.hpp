#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"

namespace coeffpat {

using Residue = std::uint32_t;

/// A prime modulus. Construction runs a deterministic primality test.
class Prime {
public:
    explicit Prime(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }
    operator std::uint32_t() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint32_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense polynomial over Z/p, coefficient of x^i at index i.
/// The empty coefficient vector is the zero polynomial; otherwise the last
/// coefficient is nonzero.
class FpPoly {
public:
    explicit FpPoly(Prime p) : p_(p) {}
    /// Coefficients are reduced mod p and trailing zeros trimmed.
    FpPoly(Prime p, std::vector<Residue> coeffs);
    /// Convenience for signed literals in tests and parsers.
    static FpPoly from_ints(Prime p, std::span<const long long> coeffs);

    static FpPoly one(Prime p) { return FpPoly(p, {1}); }
    static FpPoly monomial(Prime p, std::size_t degree, Residue c = 1);

    Prime prime() const noexcept { return p_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Residue operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const noexcept;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    Prime p_;
    std::vector<Residue> coeffs_;
};

FpPoly operator*(const FpPoly& a, const FpPoly& b);
FpPoly operator+(const FpPoly& a, const FpPoly& b);

/// f(x^c).
FpPoly substitute_power(const FpPoly& f, std::size_t c);

/// f^k mod p. Writes k in base p and uses f^(pj) = f(x^p)^j, so isolated large
/// powers cost one short convolution per base-p digit.
FpPoly poly_pow(const FpPoly& f, std::uint64_t k);

/// The coefficient string of f^k, low degree first.
struct Row {
    std::uint64_t k = 0;
    std::vector<Residue> digits;
};

Row row_digits(const FpPoly& f, std::uint64_t k);

/// Iterates rows 0, 1, 2, ... by one multiplication by f per step.
class RowIterator {
public:
    explicit RowIterator(const FpPoly& f);

    const std::vector<Residue>& digits() const noexcept { return row_; }
    std::uint64_t index() const noexcept { return k_; }
    void advance();

private:
    std::vector<Residue> f_;
    Residue p_;
    std::vector<Residue> row_;
    std::vector<Residue> scratch_;
    std::uint64_t k_ = 0;
};

/// Selects which coefficient value to count: one nonzero residue, or all
/// nonzero residues together.
class DigitQuery {
public:
    static DigitQuery total() { return DigitQuery(0); }
    /// Throws std::invalid_argument for alpha == 0.
    static DigitQuery digit(Residue alpha);

    bool is_total() const noexcept { return alpha_ == 0; }
    Residue alpha() const noexcept { return alpha_; }
    bool matches(Residue r) const noexcept { return is_total() ? r != 0 : r == alpha_; }

private:
    explicit DigitQuery(Residue a) : alpha_(a) {}
    Residue alpha_;
};

std::uint64_t count_digits(std::span<const Residue> digits, DigitQuery q) noexcept;

/// q(k, alpha): occurrences of alpha (or of any nonzero value) in row k.
std::uint64_t count_coeff(const FpPoly& f, std::uint64_t k, DigitQuery q);

/// r(n, alpha) = sum of count_coeff over rows 0..n-1.
BigInt cumulative_count(const FpPoly& f, std::uint64_t n, DigitQuery q);

/// q, qTotal and cumulative r for rows 0..rows-1, in one pass.
struct CountTable {
    Residue p = 2;
    /// perDigit[k][alpha-1] = q(k, alpha)
    std::vector<std::vector<std::uint64_t>> perDigit;
    std::vector<std::uint64_t> total;
    /// cumulativeDigit[n][alpha-1] = r(n, alpha), n = 0..rows
    std::vector<std::vector<BigInt>> cumulativeDigit;
    std::vector<BigInt> cumulativeTotal;

    std::size_t rows() const noexcept { return total.size(); }
};

CountTable count_table(const FpPoly& f, std::uint64_t rows);

}  // namespace coeffpat
