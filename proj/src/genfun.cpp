#include "coeffpat/genfun.hpp"

#include <stdexcept>

#include "coeffpat/fpoly.hpp"

namespace coeffpat {

IntPoly int_poly(std::initializer_list<long> coeffs) {
    IntPoly out;
    for (long c : coeffs) out.emplace_back(c);
    return out;
}

void divide_one_minus_zk(std::vector<BigInt>& a, std::size_t step) {
    if (step == 0) throw std::invalid_argument("divide_one_minus_zk: step must be positive");
    for (std::size_t n = step; n < a.size(); ++n) a[n] += a[n - step];
}

namespace {

void add_at(std::vector<BigInt>& a, std::size_t index, const BigInt& v) {
    if (index < a.size()) a[index] += v;
}

// exponents c * p^i with c * p^i <= limit, i = 0, 1, ...
template <class Fn>
void for_each_lacunary(std::uint64_t p, std::uint64_t c, std::uint64_t limit, Fn fn) {
    for (std::uint64_t q = 1; c * q <= limit; q *= p) {
        fn(c * q);
        if (q > limit / p) break;
    }
}

}  // namespace

SeriesCoeffs series_1px(std::uint32_t p, std::size_t N) {
    if (!is_prime(p)) throw std::invalid_argument("series_1px: not a prime");
    const BigInt P = p;
    // twice the numerator, so the (p-1)^2/2 factor stays integral
    std::vector<BigInt> num(N + 1, 0);
    num[0] = 2;
    add_at(num, 1, 2 * (P - 3));
    add_at(num, 2, 2 * (P * P - 3 * P + 3));
    const BigInt w = (P - 1) * (P - 1);
    if (N >= 2) {
        const std::uint64_t room = N - 2;
        for_each_lacunary(p, 1, room, [&](std::uint64_t e) { num[2 + e] += w * P; });
        for_each_lacunary(p, 2, room, [&](std::uint64_t e) { num[2 + e] -= w * 2 * (P - 1); });
        for_each_lacunary(p, 3, room, [&](std::uint64_t e) { num[2 + e] += w * (P - 2); });
    }
    for (auto& c : num) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw std::logic_error("series_1px: odd doubled numerator");
        c /= 2;
    }
    for (int i = 0; i < 3; ++i) divide_one_minus_zk(num);
    return SeriesCoeffs{std::move(num)};
}

SeriesCoeffs series_1xx2(std::size_t N) {
    std::vector<BigInt> num(N + 1, 0);
    num[0] = 1;
    add_at(num, 3, 2);
    add_at(num, 5, 2);
    add_at(num, 6, -1);
    if (N >= 3) {
        const std::uint64_t room = N - 3;
        for_each_lacunary(2, 1, room, [&](std::uint64_t e) { num[3 + e] += 1; });
        for_each_lacunary(2, 3, room, [&](std::uint64_t e) { num[3 + e] -= 1; });
    }
    divide_one_minus_zk(num, 2);
    divide_one_minus_zk(num);
    divide_one_minus_zk(num);
    return SeriesCoeffs{std::move(num)};
}

ResidualReport functional_residual(const SeriesCoeffs& g, const IntPoly& r, std::uint32_t p, std::size_t shift) {
    if (!is_prime(p)) throw std::invalid_argument("functional_residual: not a prime");
    IntPoly rr = r;
    while (!rr.empty() && sgn(rr.back()) == 0) rr.pop_back();
    if (rr.empty()) throw std::invalid_argument("functional_residual: r must be nonzero");
    if (g.coeffs.empty()) throw std::invalid_argument("functional_residual: empty series");
    const std::size_t N = g.order();
    const std::size_t lift = (p - 1) * shift;
    std::vector<BigInt> b(N + 1, 0);
    // z^lift r(z) g(z)
    for (std::size_t i = 0; i < rr.size(); ++i) {
        if (sgn(rr[i]) == 0) continue;
        for (std::size_t n = 0; n + i + lift <= N; ++n) b[n + i + lift] += rr[i] * g.coeffs[n];
    }
    // r(z^p) g(z^p)
    for (std::size_t i = 0; i < rr.size(); ++i) {
        if (sgn(rr[i]) == 0) continue;
        for (std::size_t n = 0; p * (n + i) <= N; ++n) b[p * (n + i)] -= rr[i] * g.coeffs[n];
    }
    ResidualReport rep;
    const std::size_t degR = rr.size() - 1;
    std::optional<std::size_t> last;
    for (std::size_t n = N + 1; n > 0; --n) {
        if (sgn(b[n - 1]) != 0) {
            last = n - 1;
            break;
        }
    }
    rep.residual = SeriesCoeffs{std::move(b)};
    if (N + 1 < p * (degR + 2 + shift)) {
        rep.status = ResidualStatus::Inconclusive;
        return rep;
    }
    const std::size_t D = last.value_or(0);
    if (p * (D + 1) <= N + 1) {
        rep.status = ResidualStatus::Bounded;
        rep.polynomialDegreeBound = D;
    } else {
        rep.status = ResidualStatus::None;
    }
    return rep;
}

const char* to_string(ResidualStatus s) noexcept {
    switch (s) {
        case ResidualStatus::Bounded: return "bounded";
        case ResidualStatus::None: return "none";
        case ResidualStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string series_csv(const SeriesCoeffs& s) {
    std::string out = "n,a_n\n";
    for (std::size_t n = 0; n < s.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += s.coeffs[n].get_str();
        out += '\n';
    }
    return out;
}

}  // namespace coeffpat
