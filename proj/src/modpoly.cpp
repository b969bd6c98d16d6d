#include "coeffpat/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeffpat {

std::uint64_t ModField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t ModField::inv(std::uint64_t a) const {
    if (a % m == 0) throw std::domain_error("ModField::inv of zero");
    return pow(a, m - 2);
}

std::uint64_t ModField::reduce(const BigInt& a) const {
    BigInt r;
    BigInt M = to_bigint(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
    return to_u64(r);
}

BigInt ModField::lift(std::uint64_t a) const {
    if (a > m / 2) return -to_bigint(m - a);
    return to_bigint(a);
}

namespace modpoly {

ModPoly x_power(const ModField& F, std::size_t k) {
    ModPoly r;
    r.c.assign(k + 1, 0);
    r.c[k] = 1 % F.m;
    r.trim();
    return r;
}

ModPoly add(const ModField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = F.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    }
    r.trim();
    return r;
}

ModPoly sub(const ModField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = F.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    }
    r.trim();
    return r;
}

ModPoly mul(const ModField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<unsigned __int128> acc(a.c.size() + b.c.size() - 1, 0);
    const unsigned __int128 M = F.m;
    // each product is < 2^126, so add at most three before reducing
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            unsigned __int128& s = acc[i + j];
            s += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
            if (s >= (static_cast<unsigned __int128>(1) << 126)) s %= M;
        }
    }
    r.c.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<std::uint64_t>(acc[i] % M);
    r.trim();
    return r;
}

ModPoly scale(const ModField& F, const ModPoly& a, std::uint64_t s) {
    ModPoly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    r.trim();
    return r;
}

void divrem(const ModField& F, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw std::domain_error("modpoly::divrem by zero");
    r = a;
    q.c.clear();
    if (a.degree() < b.degree()) return;
    const std::size_t db = static_cast<std::size_t>(b.degree());
    q.c.assign(a.c.size() - db, 0);
    const std::uint64_t li = F.inv(b.lead());
    for (std::size_t i = r.c.size(); i-- > db;) {
        const std::uint64_t coef = F.mul(r.c[i], li);
        if (coef == 0) continue;
        q.c[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) r.c[i - db + j] = F.sub(r.c[i - db + j], F.mul(coef, b.c[j]));
    }
    q.trim();
    r.trim();
}

ModPoly rem(const ModField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly q, r;
    divrem(F, a, b, q, r);
    return r;
}

ModPoly monic(const ModField& F, const ModPoly& a) {
    if (a.is_zero()) return a;
    return scale(F, a, F.inv(a.lead()));
}

ModPoly gcd(const ModField& F, ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

ModPoly ext_gcd(const ModField& F, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{{1}}, s1{}, t0{}, t1{{1}};
    while (!r1.is_zero()) {
        ModPoly q, r;
        divrem(F, r0, r1, q, r);
        ModPoly s2 = sub(F, s0, mul(F, q, s1));
        ModPoly t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    const std::uint64_t li = F.inv(r0.lead());
    s = scale(F, s0, li);
    t = scale(F, t0, li);
    return scale(F, r0, li);
}

ModPoly derivative(const ModField& F, const ModPoly& a) {
    ModPoly r;
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(F.mul(a.c[i], i % F.m));
    r.trim();
    return r;
}

ModPoly powmod(const ModField& F, const ModPoly& base, const BigInt& e, const ModPoly& f) {
    ModPoly result{{1 % F.m}};
    result = rem(F, result, f);
    ModPoly b = rem(F, base, f);
    const std::size_t bits = sgn(e) == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(F, mul(F, result, result), f);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(F, mul(F, result, b), f);
    }
    return result;
}

std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(const ModField& F, const ModPoly& f) {
    std::vector<std::pair<ModPoly, std::size_t>> out;
    ModPoly rest = monic(F, f);
    const ModPoly x = x_power(F, 1);
    ModPoly w = x;
    const BigInt p = to_bigint(F.m);
    for (std::size_t d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
        w = powmod(F, w, p, rest);
        ModPoly g = gcd(F, sub(F, w, x), rest);
        if (g.degree() > 0) {
            ModPoly q, r;
            divrem(F, rest, g, q, r);
            rest = q;
            w = modpoly::rem(F, w, rest);
            out.emplace_back(std::move(g), d);
        }
    }
    if (rest.degree() > 0) {
        const std::size_t d = static_cast<std::size_t>(rest.degree());
        out.emplace_back(std::move(rest), d);
    }
    return out;
}

std::vector<ModPoly> equal_degree(const ModField& F, const ModPoly& f, std::size_t d, std::mt19937_64& rng) {
    if (F.m == 2) throw std::invalid_argument("equal_degree: odd prime required");
    if (f.degree() == static_cast<long>(d)) return {monic(F, f)};
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.m, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coef(0, F.m - 1);
    while (true) {
        ModPoly a;
        a.c.resize(static_cast<std::size_t>(f.degree()));
        for (auto& v : a.c) v = coef(rng);
        a.trim();
        if (a.degree() < 1) continue;
        ModPoly g = gcd(F, a, f);
        if (g.degree() <= 0) {
            ModPoly b = powmod(F, a, e, f);
            g = gcd(F, sub(F, b, ModPoly{{1}}), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            ModPoly q, r;
            divrem(F, f, g, q, r);
            auto left = equal_degree(F, g, d, rng);
            auto right = equal_degree(F, q, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<ModPoly> factor_squarefree(const ModField& F, const ModPoly& f, std::mt19937_64& rng) {
    std::vector<ModPoly> out;
    for (auto& [g, d] : distinct_degree(F, f)) {
        auto parts = equal_degree(F, g, d, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    return out;
}

}  // namespace modpoly

}  // namespace coeffpat
