#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeffpat/bigint.hpp"
#include "coeffpat/fpoly.hpp"

namespace coeffpat {

/// A block is a digit string; each char holds one raw digit value 0..p-1.
using Block = std::string;

/// Text form of a block: digits concatenated for p <= 10, comma-separated otherwise.
std::string block_text(const Block& b, Prime p);

/// Accessible blocks of one length, kept sorted.
class BlockSet {
public:
    BlockSet(Prime p, std::size_t length, std::vector<Block> members);

    Prime prime() const noexcept { return p_; }
    std::size_t length() const noexcept { return length_; }
    const std::vector<Block>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const Block& b) const;

    /// Sorted newline-separated digit strings (one per line, trailing newline).
    std::string serialize() const;
    /// All length-m strings over {0..p-1} that are not members. Requires p^m small.
    std::vector<Block> complement() const;

private:
    Prime p_;
    std::size_t length_;
    std::vector<Block> members_;
};

/// Length-n windows of rows 0..maxRow; each row is padded with n zeros on both
/// sides, i.e. treated as a bi-infinite sequence.
BlockSet scan_accessible(const FpPoly& f, std::size_t n, std::uint64_t maxRow);

/// The exact accessible n-blocks: the least set containing the windows of row 0
/// and closed under row k -> row p*k+e (every window of row p*k+e is computed
/// from a shorter window of row k and the coefficients of f^e).
BlockSet closure_accessible(const FpPoly& f, std::size_t n);

struct ComplexityValue {
    std::size_t n = 0;
    BigInt value;
};

enum class LineComplexityMethod {
    /// Exact closure over the row recursion; no row cap.
    Closure,
    /// Scan rows 0..R, doubling R until nothing new appears in (R, 2R].
    Doubling,
};

struct DoublingOptions {
    std::uint64_t initialRows = 0;  ///< 0 = automatic
    std::uint64_t maxRows = 1u << 14;
};

/// a(n): number of accessible n-blocks. Doubling throws ComputationError if the
/// cap is reached before the block set stops changing.
ComplexityValue line_complexity(const FpPoly& f, std::size_t n,
                                LineComplexityMethod method = LineComplexityMethod::Closure,
                                DoublingOptions opts = {});

/// a(0..nMax) from a single pass at length nMax (a(m) counts distinct length-m
/// prefixes of accessible nMax-blocks).
std::vector<BigInt> line_complexity_profile(const FpPoly& f, std::size_t nMax,
                                            LineComplexityMethod method = LineComplexityMethod::Closure,
                                            DoublingOptions opts = {});

/// a(p*n + k) = sum_j coeffs[k][j] * a(n + j) - constant, valid for arguments
/// >= threshold; smaller arguments are read from initials.
struct RecursionSpec {
    std::uint32_t p = 2;
    std::vector<std::vector<BigInt>> coeffs;
    BigInt constant;
    std::vector<BigInt> initials;
    std::uint64_t threshold = 0;

    /// Throws std::invalid_argument when the rule would reference an argument
    /// that is not strictly smaller, or when initials do not cover [0, threshold).
    void validate() const;

    friend bool operator==(const RecursionSpec&, const RecursionSpec&) = default;
};

/// The 1+x recursion for prime p, starting points a(0)=1, a(1)=p, a(2)=p^2.
/// For p = 2 it specializes to a(2n)=3a(n)+a(n+1)-6, a(2n+1)=a(n)+3a(n+1)-6.
RecursionSpec recursion_1px(std::uint32_t p);

/// The inferred 1+x+x^2 mod 2 recursion: a(2n)=2a(n)+2a(n+1)-8,
/// a(2n+1)=a(n)+2a(n+1)+a(n+2)-8, initials 1,2,4,8,14,25.
RecursionSpec recursion_1xx2_mod2();

/// Exact value by memoized descent n -> floor(n/p) + small shifts.
BigInt a_from_recursion(const RecursionSpec& rec, std::uint64_t n);

/// a(0..N) by forward evaluation.
std::vector<BigInt> recursion_prefix(const RecursionSpec& rec, std::size_t N);

ComplexityValue a_1px(std::uint32_t p, std::uint64_t n);

struct EquivalenceCheck {
    bool ok = true;
    std::optional<std::size_t> firstMismatch;
};

/// Compares the difference-form recursion (with a(3)=(p^3+4p^2-5p+2)/2) and
/// the direct 1+x recursion for indices 0..N.
EquivalenceCheck verify_ab_equivalence(std::uint32_t p, std::size_t N);

/// a(n) of 1+x generated by the difference form alone, indices 0..N.
std::vector<BigInt> ab_difference_sequence(std::uint32_t p, std::size_t N);

/// Fits a(p*n+k) = sum_{j<=J_k} c_{k,j} a(n+j) - C to data, J_k in 0..3 as
/// small as possible per k, C shared. Throws ComputationError when no rule in
/// the template is consistent with the data.
RecursionSpec infer_recursion_from_data(std::uint32_t p, const std::vector<BigInt>& data);

/// Computes a(0..window) with the closure engine and fits the template.
/// window = 0 picks max(24, 12p).
RecursionSpec infer_recursion(const FpPoly& f, std::size_t window = 0);

/// Checks that each row k*p is row k with p-1 zeros between digits, for k < rows.
bool check_zero_interleaving(const FpPoly& f, std::uint64_t rows);

/// Evidence for the c-independence of the c+x+x^2 recursion at prime p.
struct SimilarityReport {
    std::uint32_t p = 0;
    std::vector<RecursionSpec> byC;      ///< index c-1
    std::optional<std::uint32_t> quarter;  ///< c = 1/4 mod p, if p > 2
    bool othersIdentical = false;          ///< rules (coeffs, constant) agree for all c != 1/4
    bool quarterMatchesOnePlusX = false;
};

SimilarityReport check_cxx2_similarity(std::uint32_t p, std::size_t window = 0);

/// Same coefficient rows and constant (initials and threshold may differ).
bool same_rule(const RecursionSpec& a, const RecursionSpec& b);

}  // namespace coeffpat
