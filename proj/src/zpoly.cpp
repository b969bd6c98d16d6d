#include "coeffpat/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "coeffpat/fpoly.hpp"
#include "coeffpat/modpoly.hpp"

namespace coeffpat::zpoly {

ZPoly from_ints(std::initializer_list<long> coeffs) {
    ZPoly f;
    for (long c : coeffs) f.emplace_back(c);
    trim(f);
    return f;
}

void trim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

long degree(const ZPoly& f) noexcept { return static_cast<long>(f.size()) - 1; }

const BigInt& lead(const ZPoly& f) {
    if (f.empty()) throw std::invalid_argument("lead of the zero polynomial");
    return f.back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

ZPoly scale(const ZPoly& a, const BigInt& s) {
    ZPoly r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

ZPoly derivative(const ZPoly& f) {
    ZPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

BigInt content(const ZPoly& f) {
    BigInt g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.empty()) return f;
    BigInt g = content(f);
    if (sgn(f.back()) < 0) g = -g;
    ZPoly r = f;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("divide_exact by zero");
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    for (std::size_t i = r.size(); i-- > db;) {
        if (sgn(r[i]) == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        BigInt c;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        q[i - db] = std::move(c);
    }
    for (std::size_t i = 0; i < db && i < r.size(); ++i) {
        if (sgn(r[i]) != 0) return std::nullopt;
    }
    trim(q);
    return q;
}

namespace {

ModPoly reduce(const ZPoly& f, const ModField& F) {
    ModPoly r;
    r.c.reserve(f.size());
    for (const auto& c : f) r.c.push_back(F.reduce(c));
    r.trim();
    return r;
}

/// Primes just below 2^62, descending.
class PrimeStream {
public:
    std::uint64_t next() {
        do {
            cur_ -= 2;
        } while (!is_prime(cur_));
        return cur_;
    }

private:
    std::uint64_t cur_ = (1ull << 62) + 1;
};

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return primitive_part(b);
    if (b.empty()) return primitive_part(a);
    const ZPoly A = primitive_part(a);
    const ZPoly B = primitive_part(b);
    if (A.size() == 1 || B.size() == 1) return {BigInt(1)};
    BigInt l;
    mpz_gcd(l.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    PrimeStream primes;
    long curDeg = std::min(degree(A), degree(B)) + 1;
    ZPoly acc;
    BigInt M = 1;
    ZPoly previous;
    while (true) {
        const ModField F{primes.next()};
        if (F.reduce(l) == 0) continue;
        ModPoly g = modpoly::gcd(F, reduce(A, F), reduce(B, F));
        if (g.degree() == 0) return {BigInt(1)};
        if (g.degree() > curDeg) continue;
        g = modpoly::scale(F, g, F.reduce(l));
        if (g.degree() < curDeg) {
            curDeg = g.degree();
            acc.assign(g.c.size(), 0);
            for (std::size_t i = 0; i < g.c.size(); ++i) acc[i] = to_bigint(g.c[i]);
            M = to_bigint(F.m);
            previous.clear();
        } else {
            const std::uint64_t minv = F.inv(F.reduce(M));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                const std::uint64_t r1 = F.reduce(acc[i]);
                const std::uint64_t k = F.mul(F.sub(g.c[i], r1), minv);
                acc[i] += M * to_bigint(k);
            }
            M *= to_bigint(F.m);
        }
        ZPoly sym = acc;
        const BigInt half = M / 2;
        for (auto& c : sym) {
            if (c > half) c -= M;
        }
        if (sym == previous) {
            ZPoly cand = primitive_part(sym);
            if (divide_exact(A, cand) && divide_exact(B, cand)) return cand;
        }
        previous = std::move(sym);
    }
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.empty()) throw std::invalid_argument("squarefree_part of zero");
    ZPoly P = primitive_part(f);
    if (P.size() <= 2) return P;
    ZPoly g = gcd(P, derivative(P));
    if (g.size() == 1) return P;
    return primitive_part(*divide_exact(P, g));
}

int sign_at(const ZPoly& f, const Rational& x) {
    if (f.empty()) return 0;
    const BigInt& n = x.get_num();
    const BigInt& d = x.get_den();
    BigInt h = f.back();
    BigInt dp = d;
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        h *= n;
        h += f[i] * dp;
        dp *= d;
    }
    return sgn(h);
}

Rational evaluate(const ZPoly& f, const Rational& x) {
    Rational h = 0;
    for (std::size_t i = f.size(); i-- > 0;) h = h * x + Rational(f[i]);
    return h;
}

double evaluate(const ZPoly& f, double x) {
    double h = 0;
    for (std::size_t i = f.size(); i-- > 0;) h = h * x + f[i].get_d();
    return h;
}

bool shifted_all_positive(const ZPoly& f, const BigInt& a, unsigned e) {
    if (f.empty()) return false;
    const std::size_t n = f.size() - 1;
    ZPoly s(f.size());
    // S(y) = 2^(e n) f(y / 2^e), then Taylor shift by a
    for (std::size_t i = 0; i <= n; ++i) {
        mpz_mul_2exp(s[i].get_mpz_t(), f[i].get_mpz_t(), static_cast<mp_bitcnt_t>(e) * (n - i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1; j + 1 > i; --j) {
            mpz_addmul(s[j].get_mpz_t(), a.get_mpz_t(), s[j + 1].get_mpz_t());
            if (j == 0) break;
        }
    }
    return std::all_of(s.begin(), s.end(), [](const BigInt& c) { return sgn(c) > 0; });
}

// ---------------------------------------------------------------------------
// factorization

namespace {

void mod_reduce(ZPoly& f, const BigInt& m) {
    for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(f);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r = mul(a, b);
    mod_reduce(r, m);
    return r;
}

// a = q h + r modulo m, h monic
void divrem_monic(const ZPoly& a, const ZPoly& h, const BigInt& m, ZPoly& q, ZPoly& r) {
    r = a;
    mod_reduce(r, m);
    q.clear();
    if (r.size() < h.size()) return;
    const std::size_t dh = h.size() - 1;
    q.assign(r.size() - dh, 0);
    for (std::size_t i = r.size(); i-- > dh;) {
        mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
        if (sgn(r[i]) == 0) continue;
        const BigInt c = r[i];
        for (std::size_t j = 0; j <= dh; ++j) mpz_submul(r[i - dh + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
        q[i - dh] = c;
    }
    mod_reduce(q, m);
    mod_reduce(r, m);
}

ZPoly to_z(const ModPoly& f) {
    ZPoly r;
    for (auto c : f.c) r.push_back(to_bigint(c));
    return r;
}

ZPoly mod_inverse_scale(const ZPoly& f, const BigInt& m) {
    BigInt inv;
    if (!mpz_invert(inv.get_mpz_t(), lead(f).get_mpz_t(), m.get_mpz_t())) {
        throw std::logic_error("hensel: leading coefficient not invertible");
    }
    ZPoly r = scale(f, inv);
    mod_reduce(r, m);
    return r;
}

/// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m) {
    const BigInt m2 = m * m;
    ZPoly e = sub(f, mul(g, h));
    mod_reduce(e, m2);
    ZPoly q, r;
    divrem_monic(mul_mod(s, e, m2), h, m2, q, r);
    ZPoly gs = add(g, add(mul(t, e), mul(q, g)));
    mod_reduce(gs, m2);
    ZPoly hs = add(h, r);
    mod_reduce(hs, m2);
    ZPoly b = sub(add(mul(s, gs), mul(t, hs)), {BigInt(1)});
    mod_reduce(b, m2);
    ZPoly c, d;
    divrem_monic(mul_mod(s, b, m2), hs, m2, c, d);
    ZPoly ss = sub(s, d);
    mod_reduce(ss, m2);
    ZPoly ts = sub(t, add(mul(t, b), mul(c, gs)));
    mod_reduce(ts, m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

/// Monic lifts mod q^(2^rounds) of the factors of F mod q; F = lc(F) * prod.
std::vector<ZPoly> multi_lift(const ZPoly& F, const std::vector<ModPoly>& factors, const ModField& Fq, unsigned rounds) {
    BigInt Q = to_bigint(Fq.m);
    for (unsigned i = 0; i < rounds; ++i) Q *= Q;
    if (factors.size() == 1) return {mod_inverse_scale(F, Q)};
    const std::size_t half = factors.size() / 2;
    ModPoly G0{{Fq.reduce(lead(F))}};
    ModPoly H0{{1}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i < half) {
            G0 = modpoly::mul(Fq, G0, factors[i]);
        } else {
            H0 = modpoly::mul(Fq, H0, factors[i]);
        }
    }
    ModPoly s0, t0;
    modpoly::ext_gcd(Fq, G0, H0, s0, t0);
    ZPoly g = to_z(G0), h = to_z(H0), s = to_z(s0), t = to_z(t0);
    BigInt m = to_bigint(Fq.m);
    for (unsigned i = 0; i < rounds; ++i) {
        hensel_step(F, g, h, s, t, m);
        m *= m;
    }
    std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    auto out = multi_lift(g, left, Fq, rounds);
    auto rest = multi_lift(h, right, Fq, rounds);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

ZPoly symmetric(ZPoly f, const BigInt& m) {
    mod_reduce(f, m);
    const BigInt half = m / 2;
    for (auto& c : f) {
        if (c > half) c -= m;
    }
    trim(f);
    return f;
}

BigInt norm2_ceil(const ZPoly& f) {
    BigInt s = 0;
    for (const auto& c : f) s += c * c;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

std::size_t count_factors_by_degree(const ModField& F, const ModPoly& f) {
    std::size_t n = 0;
    for (const auto& [g, d] : modpoly::distinct_degree(F, f)) n += static_cast<std::size_t>(g.degree()) / d;
    return n;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Factorization factor_squarefree(const ZPoly& f, std::uint64_t workCap) {
    Factorization out;
    ZPoly F = primitive_part(f);
    if (F.empty()) throw std::invalid_argument("factor_squarefree of zero");
    // small integer roots first; characteristic polynomials have many
    for (long r : {0l, 1l, -1l, 2l, -2l, 3l, -3l, 4l, -4l}) {
        if (F.size() <= 2) break;
        if (sign_at(F, Rational(r)) == 0) {
            const ZPoly lin{BigInt(-r), BigInt(1)};
            out.factors.push_back(lin);
            F = *divide_exact(F, lin);
        }
    }
    if (F.size() <= 2) {
        if (F.size() == 2) out.factors.push_back(F);
        out.complete = true;
        return out;
    }
    // pick the admissible small prime with the fewest modular factors
    const ZPoly dF = derivative(F);
    std::uint64_t bestPrime = 0;
    std::size_t bestCount = SIZE_MAX;
    int tried = 0;
    for (std::uint64_t q = 3; q < 2000 && tried < 6; q += 2) {
        if (!is_prime(q)) continue;
        const ModField Fq{q};
        if (Fq.reduce(lead(F)) == 0) continue;
        const ModPoly fq = reduce(F, Fq);
        if (modpoly::gcd(Fq, fq, reduce(dF, Fq)).degree() != 0) continue;
        ++tried;
        const std::size_t n = count_factors_by_degree(Fq, modpoly::monic(Fq, fq));
        if (n < bestCount) {
            bestCount = n;
            bestPrime = q;
        }
        if (n == 1) break;
    }
    if (bestPrime == 0) throw std::logic_error("factor_squarefree: no admissible prime");
    if (bestCount == 1) {
        out.factors.push_back(F);
        out.complete = true;
        return out;
    }
    const ModField Fq{bestPrime};
    std::mt19937_64 rng(0x5eed);
    const auto modFactors = modpoly::factor_squarefree(Fq, modpoly::monic(Fq, reduce(F, Fq)), rng);

    // lift past 2 |lc| 2^n ||F||_2 so every true factor is recovered symmetrically
    const std::size_t n = F.size() - 1;
    BigInt bound = 2 * abs(lead(F)) * norm2_ceil(F);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    unsigned rounds = 0;
    BigInt Q = to_bigint(bestPrime);
    while (Q <= bound) {
        Q *= Q;
        ++rounds;
    }
    std::vector<ZPoly> lifted = multi_lift(F, modFactors, Fq, rounds);

    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    ZPoly rest = F;
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> comb(size);
        for (std::size_t i = 0; i < size; ++i) comb[i] = i;
        const BigInt lc = lead(rest);
        const BigInt lcConst = lc * rest[0];
        do {
            if (++out.work > workCap) {
                out.factors.push_back(rest);
                out.complete = false;
                return out;
            }
            // constant-term filter before forming the product
            BigInt c0 = lc;
            for (std::size_t i : comb) {
                c0 *= lifted[remaining[i]][0];
                mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), Q.get_mpz_t());
            }
            if (c0 > Q / 2) c0 -= Q;
            if (sgn(c0) == 0 || !mpz_divisible_p(lcConst.get_mpz_t(), c0.get_mpz_t())) continue;
            ZPoly g{lc};
            for (std::size_t i : comb) g = mul_mod(g, lifted[remaining[i]], Q);
            ZPoly cand = primitive_part(symmetric(g, Q));
            auto quotient = divide_exact(rest, cand);
            if (!quotient) continue;
            out.factors.push_back(cand);
            rest = std::move(*quotient);
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                if (std::find(comb.begin(), comb.end(), i) == comb.end()) keep.push_back(remaining[i]);
            }
            remaining = std::move(keep);
            found = true;
            break;
        } while (next_combination(comb, remaining.size()));
        if (!found) ++size;
    }
    if (rest.size() > 1) out.factors.push_back(primitive_part(rest));
    out.complete = true;
    return out;
}

std::string to_string(const ZPoly& f, char var) {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        const BigInt& c = f[i];
        if (sgn(c) == 0) continue;
        BigInt a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (a != 1 || i == 0) out += a.get_str();
        if (i > 0) {
            out += var;
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

}  // namespace coeffpat::zpoly
