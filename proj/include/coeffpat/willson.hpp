#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"
#include "coeffpat/charpoly.hpp"
#include "coeffpat/fpoly.hpp"
#include "coeffpat/zpoly.hpp"

namespace coeffpat {

/// Window-transfer system for f over F2. A state is a nonzero window of L = d+1
/// consecutive digits of a row, encoded with digit j at bit j.
struct TransferSystem {
    FpPoly f{Prime(2)};
    std::size_t L = 0;
    /// state codes, one per matrix index
    std::vector<std::uint32_t> states;
    /// maps[eps][delta][i]: index of the child of state i, or -1 for the zero window
    std::vector<std::int32_t> maps[2][2];
    IntMatrix B0, B1, B;
    std::vector<std::int64_t> u, v;
    bool trimmed = false;

    std::size_t size() const noexcept { return states.size(); }
};

/// The full system over all 2^L - 1 nonzero windows. f must be over F2 and nonzero.
TransferSystem build_transfer(const FpPoly& f);

/// Restriction to states reachable from supp(v) and co-reachable to supp(u).
TransferSystem trim(const TransferSystem& sys);

/// u^T B^k v for k = 0..K.
std::vector<BigInt> transfer_counts(const TransferSystem& sys, std::size_t K);

struct CountCheck {
    bool ok = true;
    std::optional<std::uint64_t> failingK;  ///< u^T B^k v != r(2^k)
    std::optional<std::uint64_t> failingM;  ///< per-row product != q(m)
};

/// Checks u^T B^k v = r(2^k) for k <= K and the per-row digit products against
/// q(m) for m < 2^K, using brute-force rows.
CountCheck verify_counts(const TransferSystem& sys, std::size_t K);

struct SpectralResult {
    double lambda = 0;
    Rational lo, hi;  ///< isolating interval; lo == hi when lambda is rational
    std::optional<Rational> exact;
    ZPoly charpoly;
    ZPoly squarefree;
    std::optional<ZPoly> minpoly;  ///< empty while PENDING
    std::optional<std::size_t> degree;
    double dimension = 0;
    double ratio = 0;  ///< u^T B^41 v / u^T B^40 v
};

/// Relative tolerance between lambda and the k=40 growth ratio.
inline constexpr double kRatioTolerance = 1e-3;

/// Largest real root of the trimmed characteristic polynomial, isolated to
/// width <= 1e-9. Throws ComputationError if the growth ratio disagrees.
SpectralResult perron(const TransferSystem& sys);

/// Fills minpoly/degree by factoring the squarefree part; leaves them empty
/// (PENDING) when the work cap is hit.
SpectralResult minpoly_of_lambda(SpectralResult res, std::uint64_t workCap = 2'000'000);

struct SimilarityClass {
    FpPoly canonical{Prime(2)};
    std::vector<std::string> witnesses;  ///< steps from the input to canonical
};

/// Least fixpoint of the reductions (strip x^c, root extraction, desubstitution,
/// reversal) ordered by degree, then by the ascending exponent list.
SimilarityClass canonicalize(const FpPoly& f);

/// Order used by canonicalize.
bool canonical_less(const FpPoly& a, const FpPoly& b);

/// Canonical representatives of degree 1..maxDeg.
std::vector<SimilarityClass> enumerate_classes(std::size_t maxDeg);

/// 4 (1 - 1/2^(k+2))^(1/(k+1)) with k = ceil(log2 degF).
double eigen_bound(std::size_t degF);

struct SurveyRow {
    FpPoly poly{Prime(2)};
    SpectralResult spectrum;
    bool boundOk = false;
    bool countsOk = false;
    std::size_t states = 0;  ///< trimmed system size
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    /// (k, Lambda_k = max lambda over classes of degree <= k)
    std::vector<std::pair<std::size_t, double>> lambdaMax;
};

/// Per-class spectrum, minimal polynomial degree, bound and count checks (k <= K).
SurveyResult survey(std::size_t maxDeg, std::size_t K, std::uint64_t workCap = 2'000'000);

/// TSV with header "poly lambda degree dimension bound_ok".
std::string survey_tsv(const SurveyResult& s);

}  // namespace coeffpat
