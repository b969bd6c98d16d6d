#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"

namespace coeffpat {

/// Exact power-series prefix: coeffs[n] is the coefficient of z^n.
struct SeriesCoeffs {
    std::vector<BigInt> coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    /// Highest computed index N (the prefix has N+1 terms).
    std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    const BigInt& operator[](std::size_t n) const { return coeffs[n]; }

    friend bool operator==(const SeriesCoeffs&, const SeriesCoeffs&) = default;
};

/// Integer polynomial, low degree first.
using IntPoly = std::vector<BigInt>;

IntPoly int_poly(std::initializer_list<long> coeffs);

/// In-place division of a series prefix by (1 - z^step), i.e. a[n] += a[n - step].
void divide_one_minus_zk(std::vector<BigInt>& a, std::size_t step = 1);

/// First N+1 coefficients of the generating function of a(n) for 1+x mod p.
SeriesCoeffs series_1px(std::uint32_t p, std::size_t N);

/// First N+1 coefficients of the generating function of a(n) for 1+x+x^2 mod 2.
SeriesCoeffs series_1xx2(std::size_t N);

enum class ResidualStatus {
    Bounded,       ///< residual vanishes above polynomialDegreeBound on the prefix
    None,          ///< nonzero coefficients reach too close to the end of the prefix
    Inconclusive,  ///< prefix too short to certify anything
};

struct ResidualReport {
    SeriesCoeffs residual;
    std::optional<std::size_t> polynomialDegreeBound;
    ResidualStatus status = ResidualStatus::Inconclusive;
};

/// b(z) = r(z) g(z) - r(z^p) g(z^p) on the prefix of g. With shift s > 0 the
/// multiplier is the Laurent polynomial z^-s r(z); the residual is then scaled
/// by z^(ps): b(z) = z^((p-1)s) r(z) g(z) - r(z^p) g(z^p).
///
/// Certification: inconclusive if N+1 < p(deg r + 2 + s). Otherwise, with D the
/// last nonzero residual index, Bounded with bound D when p(D+1) <= N+1.
ResidualReport functional_residual(const SeriesCoeffs& g, const IntPoly& r, std::uint32_t p, std::size_t shift = 0);

const char* to_string(ResidualStatus s) noexcept;

/// CSV with header "n,a_n".
std::string series_csv(const SeriesCoeffs& s);

}  // namespace coeffpat
