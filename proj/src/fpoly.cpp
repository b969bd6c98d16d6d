#include "coeffpat/fpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeffpat {

std::uint64_t to_u64(const BigInt& v) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    using u128 = unsigned __int128;
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint32_t value) : value_(value) {
    if (!is_prime(value)) {
        throw std::invalid_argument("not a prime: " + std::to_string(value));
    }
}

FpPoly::FpPoly(Prime p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_.value();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::from_ints(Prime p, std::span<const long long> coeffs) {
    std::vector<Residue> out;
    out.reserve(coeffs.size());
    const long long m = p.value();
    for (long long c : coeffs) out.push_back(static_cast<Residue>(((c % m) + m) % m));
    return FpPoly(p, std::move(out));
}

FpPoly FpPoly::monomial(Prime p, std::size_t degree, Residue c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

std::size_t FpPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    return 0;
}

namespace {

void check_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("polynomials over different fields");
}

std::vector<Residue> convolve(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    // accumulate without reduction while it cannot overflow
    const std::uint64_t limit = UINT64_MAX - static_cast<std::uint64_t>(p - 1) * (p - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            std::uint64_t& slot = acc[i + j];
            slot += ai * b[j];
            if (slot >= limit) slot %= p;
        }
    }
    std::vector<Residue> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Residue>(acc[i] % p);
    return out;
}

}  // namespace

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    return FpPoly(a.prime(), convolve(a.coeffs(), b.coeffs(), a.prime()));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % a.prime().value();
    return FpPoly(a.prime(), std::move(out));
}

FpPoly substitute_power(const FpPoly& f, std::size_t c) {
    if (c == 0) throw std::invalid_argument("substitute_power: exponent multiplier must be positive");
    if (f.is_zero()) return f;
    std::vector<Residue> out(static_cast<std::size_t>(f.degree()) * c + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * c] = f.coeffs()[i];
    return FpPoly(f.prime(), std::move(out));
}

FpPoly poly_pow(const FpPoly& f, std::uint64_t k) {
    const Prime p = f.prime();
    if (k == 0) return FpPoly::one(p);
    if (f.is_zero()) return f;
    // f^k = f^(k mod p) * (f^(k div p))(x^p)
    const std::uint64_t low = k % p.value();
    const std::uint64_t high = k / p.value();
    FpPoly small = FpPoly::one(p);
    for (std::uint64_t i = 0; i < low; ++i) small = small * f;
    if (high == 0) return small;
    return small * substitute_power(poly_pow(f, high), p.value());
}

Row row_digits(const FpPoly& f, std::uint64_t k) {
    if (f.is_zero()) throw std::invalid_argument("row_digits: zero polynomial");
    FpPoly g = poly_pow(f, k);
    std::vector<Residue> digits = g.coeffs();
    // rows of f = x^v g0 keep their leading zeros so the length is k*deg+1
    digits.resize(static_cast<std::size_t>(k * static_cast<std::uint64_t>(f.degree()) + 1), 0);
    return Row{k, std::move(digits)};
}

RowIterator::RowIterator(const FpPoly& f) : f_(f.coeffs()), p_(f.prime().value()), row_{1} {
    if (f.is_zero()) throw std::invalid_argument("RowIterator: zero polynomial");
}

void RowIterator::advance() {
    scratch_.assign(row_.size() + f_.size() - 1, 0);
    for (std::size_t j = 0; j < f_.size(); ++j) {
        const Residue c = f_[j];
        if (c == 0) continue;
        for (std::size_t i = 0; i < row_.size(); ++i) {
            if (row_[i] == 0) continue;
            scratch_[i + j] = static_cast<Residue>((scratch_[i + j] + static_cast<std::uint64_t>(c) * row_[i]) % p_);
        }
    }
    row_.swap(scratch_);
    ++k_;
}

DigitQuery DigitQuery::digit(Residue alpha) {
    if (alpha == 0) throw std::invalid_argument("count of digit 0 is not defined; use length minus total");
    return DigitQuery(alpha);
}

std::uint64_t count_digits(std::span<const Residue> digits, DigitQuery q) noexcept {
    return static_cast<std::uint64_t>(std::count_if(digits.begin(), digits.end(), [q](Residue r) { return q.matches(r); }));
}

namespace {

void check_query(const FpPoly& f, DigitQuery q) {
    if (f.is_zero()) throw std::invalid_argument("count on the zero polynomial");
    if (!q.is_total() && q.alpha() >= f.prime().value()) {
        throw std::invalid_argument("digit out of range for the modulus");
    }
}

}  // namespace

std::uint64_t count_coeff(const FpPoly& f, std::uint64_t k, DigitQuery q) {
    check_query(f, q);
    return count_digits(poly_pow(f, k).coeffs(), q);
}

BigInt cumulative_count(const FpPoly& f, std::uint64_t n, DigitQuery q) {
    check_query(f, q);
    BigInt total = 0;
    std::uint64_t partial = 0;
    RowIterator rows(f);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t c = count_digits(rows.digits(), q);
        if (partial > UINT64_MAX - c) {
            total += to_bigint(partial);
            partial = 0;
        }
        partial += c;
        if (i + 1 < n) rows.advance();
    }
    total += to_bigint(partial);
    return total;
}

CountTable count_table(const FpPoly& f, std::uint64_t rows) {
    check_query(f, DigitQuery::total());
    const Residue p = f.prime().value();
    CountTable t;
    t.p = p;
    t.perDigit.reserve(rows);
    t.total.reserve(rows);
    t.cumulativeDigit.assign(1, std::vector<BigInt>(p - 1, 0));
    t.cumulativeTotal.assign(1, 0);
    RowIterator it(f);
    for (std::uint64_t k = 0; k < rows; ++k) {
        std::vector<std::uint64_t> per(p - 1, 0);
        std::uint64_t tot = 0;
        for (Residue r : it.digits()) {
            if (r != 0) {
                ++per[r - 1];
                ++tot;
            }
        }
        std::vector<BigInt> cum = t.cumulativeDigit.back();
        for (Residue a = 0; a + 1 < p; ++a) cum[a] += to_bigint(per[a]);
        t.cumulativeDigit.push_back(std::move(cum));
        t.cumulativeTotal.push_back(t.cumulativeTotal.back() + to_bigint(tot));
        t.perDigit.push_back(std::move(per));
        t.total.push_back(tot);
        if (k + 1 < rows) it.advance();
    }
    return t;
}

}  // namespace coeffpat
