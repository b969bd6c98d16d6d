#pragma once

#include <cstdint>
#include <vector>

#include "coeffpat/bigint.hpp"
#include "coeffpat/zpoly.hpp"

namespace coeffpat {

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> a_;
};

/// det(x I - A), monic, low degree first. Computed modulo several 62-bit primes
/// by Hessenberg reduction and combined by CRT under the bound prod_j (1 + ||col_j||_2).
ZPoly charpoly(const IntMatrix& A);

/// Same polynomial from exact determinants det(t I - A), t = 0..n (fraction-free
/// Bareiss elimination), interpolated. Slower; kept as an independent check.
ZPoly charpoly_interpolated(const IntMatrix& A);

/// Exact determinant by Bareiss elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> M);

}  // namespace coeffpat
