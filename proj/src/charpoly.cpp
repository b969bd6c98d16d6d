#include "coeffpat/charpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "coeffpat/fpoly.hpp"
#include "coeffpat/modpoly.hpp"

namespace coeffpat {

namespace {

/// det(xI - A) mod q via reduction to upper Hessenberg form.
std::vector<std::uint64_t> charpoly_mod(const IntMatrix& A, const ModField& F) {
    const std::size_t n = A.size();
    std::vector<std::vector<std::uint64_t>> H(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = A(i, j);
            H[i][j] = v >= 0 ? static_cast<std::uint64_t>(v) % F.m : F.neg(static_cast<std::uint64_t>(-v) % F.m);
        }
    }
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && H[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(H[piv], H[k + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(H[i][piv], H[i][k + 1]);
        }
        const std::uint64_t inv = F.inv(H[k + 1][k]);
        for (std::size_t i = k + 2; i < n; ++i) {
            if (H[i][k] == 0) continue;
            const std::uint64_t u = F.mul(H[i][k], inv);
            // row_i -= u row_{k+1}; then col_{k+1} += u col_i keeps the similarity
            for (std::size_t j = 0; j < n; ++j) H[i][j] = F.sub(H[i][j], F.mul(u, H[k + 1][j]));
            for (std::size_t j = 0; j < n; ++j) H[j][k + 1] = F.add(H[j][k + 1], F.mul(u, H[j][i]));
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<std::uint64_t>> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> cur(m + 1, 0);
        const auto& prev = p[m - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = F.add(cur[i + 1], prev[i]);
            cur[i] = F.sub(cur[i], F.mul(H[m - 1][m - 1], prev[i]));
        }
        std::uint64_t prod = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            prod = F.mul(prod, H[i + 1][i]);
            if (prod == 0) break;
            const std::uint64_t coef = F.mul(H[i][m - 1], prod);
            if (coef == 0) continue;
            for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] = F.sub(cur[t], F.mul(coef, p[i][t]));
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

}  // namespace

ZPoly charpoly(const IntMatrix& A) {
    const std::size_t n = A.size();
    if (n == 0) return {BigInt(1)};
    // coefficients of det(xI - A) are bounded by prod_j (1 + ||col_j||_2) (Hadamard
    // applied to each principal minor sum); twice that for the sign
    double log2Bound = 1;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(A(i, j)) * static_cast<double>(A(i, j));
        log2Bound += std::log2(1 + std::sqrt(s));
    }
    std::vector<BigInt> acc(n + 1, 0);
    BigInt M = 1;
    double log2M = 0;
    std::uint64_t q = (1ull << 62) + 1;
    while (log2M < log2Bound + 2) {
        do {
            q -= 2;
        } while (!is_prime(q));
        const ModField F{q};
        const auto r = charpoly_mod(A, F);
        const std::uint64_t minv = M == 1 ? 1 : F.inv(F.reduce(M));
        for (std::size_t i = 0; i <= n; ++i) {
            const std::uint64_t k = F.mul(F.sub(r[i], F.reduce(acc[i])), minv);
            acc[i] += M * to_bigint(k);
        }
        M *= to_bigint(q);
        log2M += std::log2(static_cast<double>(q));
    }
    const BigInt half = M / 2;
    for (auto& c : acc) {
        if (c > half) c -= M;
    }
    zpoly::trim(acc);
    return acc;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(M[k][k]) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(M[piv][k]) == 0) ++piv;
            if (piv == n) return 0;
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(v);
            }
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

ZPoly charpoly_interpolated(const IntMatrix& A) {
    const std::size_t n = A.size();
    std::vector<BigInt> values(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) M[i][j] = BigInt(static_cast<long>(-A(i, j)));
            M[i][i] += static_cast<unsigned long>(t);
        }
        values[t] = bareiss_determinant(std::move(M));
    }
    // Newton divided differences at nodes 0..n, then expand to monomial basis
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t i = n; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
            if (i == level) break;
        }
    }
    std::vector<Rational> poly{dd[n]};
    for (std::size_t k = n; k-- > 0;) {
        // poly = poly * (x - k) + dd[k]
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * static_cast<long>(k);
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    ZPoly out;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("charpoly_interpolated: non-integral coefficient");
        out.push_back(c.get_num());
    }
    zpoly::trim(out);
    return out;
}

}  // namespace coeffpat
