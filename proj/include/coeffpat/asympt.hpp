#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"
#include "coeffpat/blocks.hpp"

namespace coeffpat {

struct Family {
    enum class Kind { OnePlusX, OnePlusXPlusX2Mod2 };
    Kind kind = Kind::OnePlusX;
    std::uint32_t p = 2;

    static Family one_plus_x(std::uint32_t p);
    static Family one_plus_x_plus_x2_mod2() { return {Kind::OnePlusXPlusX2Mod2, 2}; }

    std::string name() const;
};

/// q(x) = A x^2 + B x + C on [lo, hi].
struct QuadPiece {
    Rational lo, hi;
    Rational A, B, C;

    Rational operator()(const Rational& x) const { return (A * x + B) * x + C; }
};

/// Limit of a(n)/n^2 along n = floor(p^k / x), exact rationals on [1/p, 1].
class PiecewiseQuadratic {
public:
    PiecewiseQuadratic(std::uint32_t p, std::vector<QuadPiece> pieces);

    std::uint32_t prime() const noexcept { return p_; }
    const std::vector<QuadPiece>& pieces() const noexcept { return pieces_; }

    /// L(x) for any x > 0, using L(x) = L(p x).
    Rational operator()(Rational x) const;

    /// Pieces tile [1/p, 1] and agree at every shared endpoint.
    bool is_continuous() const;
    /// L(1/p) == L(1).
    bool is_periodic() const;

private:
    std::uint32_t p_;
    std::vector<QuadPiece> pieces_;
};

PiecewiseQuadratic limit_function(const Family& family);

struct ExtremaResult {
    Rational inf, sup;
    Rational argInf, argSup;
};

/// Sharp constants from their closed forms.
ExtremaResult extrema(const Family& family);

/// Global extrema by endpoint/vertex analysis of each piece; ties go to the
/// smallest argument.
ExtremaResult extrema_of(const PiecewiseQuadratic& L);

/// Exact recursion for the family's a(n).
RecursionSpec family_recursion(const Family& family);

/// a(n)/n^2 at n = floor(p^k / x), a(n) exact.
double empirical_ratio(const RecursionSpec& rec, const Rational& x, std::uint32_t k);

struct OscillationRow {
    Rational x;  ///< grid point in [1/p, 1]
    BigInt n;
    BigInt a;
    double logn = 0;   ///< log_p n
    double ratio = 0;  ///< a / n^2
};

/// Grid x_j = round(p^(-j/s) 2^20) / 2^20, j = 0..s-1, and n = floor(p^k / x_j)
/// for k = 1..kMax. Rows sorted by n.
std::vector<OscillationRow> oscillation_table(const RecursionSpec& rec, std::uint32_t samplesPerOctave,
                                              std::uint32_t kMax);

/// Header "logn,ratio", values with 12 significant digits.
std::string oscillation_csv(const std::vector<OscillationRow>& rows);

/// "%.12g" rendering shared with the CLI.
std::string format_g12(double v);

}  // namespace coeffpat
