#include "coeffpat/willson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coeffpat/error.hpp"
#include "coeffpat/polytext.hpp"

namespace coeffpat {

TransferSystem build_transfer(const FpPoly& f) {
    if (f.prime().value() != 2) throw std::invalid_argument("build_transfer: p must be 2");
    if (f.is_zero()) throw std::invalid_argument("build_transfer: zero polynomial");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const std::size_t L = d + 1;
    if (L > 20) throw std::invalid_argument("build_transfer: degree too large");
    TransferSystem sys;
    sys.f = f;
    sys.L = L;
    const std::size_t n = (std::size_t{1} << L) - 1;
    sys.states.resize(n);
    for (std::size_t i = 0; i < n; ++i) sys.states[i] = static_cast<std::uint32_t>(i + 1);

    const std::vector<Residue> e[2] = {{1}, f.coeffs()};
    for (int eps = 0; eps < 2; ++eps) {
        // masks[delta][r]: parent digits j that feed child digit r
        std::uint32_t masks[2][32] = {};
        for (int delta = 0; delta < 2; ++delta) {
            for (std::size_t r = 0; r < L; ++r) {
                for (std::size_t j = 0; j < L; ++j) {
                    const long idx = static_cast<long>(d) - 1 + delta + static_cast<long>(r) - 2 * static_cast<long>(j);
                    if (idx >= 0 && idx < static_cast<long>(e[eps].size()) && e[eps][static_cast<std::size_t>(idx)]) {
                        masks[delta][r] |= 1u << j;
                    }
                }
            }
        }
        for (int delta = 0; delta < 2; ++delta) {
            auto& map = sys.maps[eps][delta];
            map.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t b = sys.states[i];
                std::uint32_t c = 0;
                for (std::size_t r = 0; r < L; ++r) {
                    if (__builtin_parity(b & masks[delta][r])) c |= 1u << r;
                }
                map[i] = c == 0 ? -1 : static_cast<std::int32_t>(c - 1);
            }
        }
    }
    sys.B0 = IntMatrix(n);
    sys.B1 = IntMatrix(n);
    sys.B = IntMatrix(n);
    for (int eps = 0; eps < 2; ++eps) {
        IntMatrix& Be = eps ? sys.B1 : sys.B0;
        for (int delta = 0; delta < 2; ++delta) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::int32_t c = sys.maps[eps][delta][i];
                if (c < 0) continue;
                ++Be(static_cast<std::size_t>(c), i);
                ++sys.B(static_cast<std::size_t>(c), i);
            }
        }
    }
    sys.u.assign(n, 0);
    sys.v.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) sys.u[i] = sys.states[i] & 1u;
    for (std::size_t j = 0; j < L; ++j) sys.v[(std::size_t{1} << j) - 1] = 1;
    return sys;
}

TransferSystem trim(const TransferSystem& sys) {
    const std::size_t n = sys.size();
    std::vector<std::vector<std::size_t>> out(n), in(n);
    for (int eps = 0; eps < 2; ++eps) {
        for (int delta = 0; delta < 2; ++delta) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::int32_t c = sys.maps[eps][delta][i];
                if (c < 0) continue;
                out[i].push_back(static_cast<std::size_t>(c));
                in[static_cast<std::size_t>(c)].push_back(i);
            }
        }
    }
    auto flood = [n](const std::vector<std::int64_t>& seed, const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<char> seen(n, 0);
        std::deque<std::size_t> queue;
        for (std::size_t i = 0; i < n; ++i) {
            if (seed[i]) {
                seen[i] = 1;
                queue.push_back(i);
            }
        }
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j : adj[i]) {
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        return seen;
    };
    const auto fwd = flood(sys.v, out);
    const auto bwd = flood(sys.u, in);
    std::vector<std::int32_t> remap(n, -1);
    TransferSystem t;
    t.f = sys.f;
    t.L = sys.L;
    t.trimmed = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (fwd[i] && bwd[i]) {
            remap[i] = static_cast<std::int32_t>(t.states.size());
            t.states.push_back(sys.states[i]);
        }
    }
    const std::size_t m = t.states.size();
    t.B0 = IntMatrix(m);
    t.B1 = IntMatrix(m);
    t.B = IntMatrix(m);
    t.u.assign(m, 0);
    t.v.assign(m, 0);
    for (int eps = 0; eps < 2; ++eps) {
        for (int delta = 0; delta < 2; ++delta) t.maps[eps][delta].assign(m, -1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (remap[i] < 0) continue;
        const auto ni = static_cast<std::size_t>(remap[i]);
        t.u[ni] = sys.u[i];
        t.v[ni] = sys.v[i];
        for (int eps = 0; eps < 2; ++eps) {
            for (int delta = 0; delta < 2; ++delta) {
                const std::int32_t c = sys.maps[eps][delta][i];
                // children off the kept set are dropped like the zero window
                if (c < 0 || remap[static_cast<std::size_t>(c)] < 0) continue;
                const auto nc = static_cast<std::size_t>(remap[static_cast<std::size_t>(c)]);
                t.maps[eps][delta][ni] = static_cast<std::int32_t>(nc);
                ++(eps ? t.B1 : t.B0)(nc, ni);
                ++t.B(nc, ni);
            }
        }
    }
    return t;
}

namespace {

std::vector<BigInt> mat_vec(const IntMatrix& M, const std::vector<BigInt>& w) {
    const std::size_t n = M.size();
    std::vector<BigInt> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t a = M(i, j);
            if (a) out[i] += w[j] * static_cast<long>(a);
        }
    }
    return out;
}

BigInt dot(const std::vector<std::int64_t>& u, const std::vector<BigInt>& w) {
    BigInt s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i]) s += w[i] * static_cast<long>(u[i]);
    }
    return s;
}

}  // namespace

std::vector<BigInt> transfer_counts(const TransferSystem& sys, std::size_t K) {
    std::vector<BigInt> w(sys.v.begin(), sys.v.end());
    std::vector<BigInt> out;
    for (std::size_t k = 0; k <= K; ++k) {
        out.push_back(dot(sys.u, w));
        if (k < K) w = mat_vec(sys.B, w);
    }
    return out;
}

CountCheck verify_counts(const TransferSystem& sys, std::size_t K) {
    if (K > 20) throw std::invalid_argument("verify_counts: K too large for brute force");
    const std::uint64_t rows = std::uint64_t{1} << K;
    std::vector<std::uint64_t> q(rows);
    RowIterator it(sys.f);
    for (std::uint64_t m = 0; m < rows; ++m) {
        q[m] = count_digits(it.digits(), DigitQuery::total());
        if (m + 1 < rows) it.advance();
    }
    CountCheck res;
    const auto counts = transfer_counts(sys, K);
    std::uint64_t r = 0;
    for (std::size_t k = 0; k <= K; ++k) {
        const std::uint64_t upto = std::uint64_t{1} << k;
        // r(2^k) = sum of q(m) for m < 2^k
        r = 0;
        for (std::uint64_t m = 0; m < upto; ++m) r += q[m];
        if (counts[k] != to_bigint(r)) {
            res.ok = false;
            res.failingK = k;
            return res;
        }
    }
    // w_m = B_{m mod 2} w_{m div 2}, w_0 = v
    const std::size_t n = sys.size();
    std::vector<std::vector<std::int64_t>> w(rows, std::vector<std::int64_t>(n, 0));
    w[0] = sys.v;
    for (std::uint64_t m = 0; m < rows; ++m) {
        if (m > 0) {
            const IntMatrix& Be = (m & 1) ? sys.B1 : sys.B0;
            const auto& parent = w[m >> 1];
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < n; ++j) s += Be(i, j) * parent[j];
                w[m][i] = s;
            }
        }
        std::int64_t total = 0;
        for (std::size_t i = 0; i < n; ++i) total += sys.u[i] * w[m][i];
        if (static_cast<std::uint64_t>(total) != q[m]) {
            res.ok = false;
            res.failingM = m;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// spectra

SpectralResult perron(const TransferSystem& input) {
    const TransferSystem sys = input.trimmed ? input : trim(input);
    if (sys.size() == 0) throw ComputationError("perron: trimmed system is empty");
    SpectralResult res;
    res.charpoly = charpoly(sys.B);
    res.squarefree = zpoly::squarefree_part(res.charpoly);
    const ZPoly& s = res.squarefree;

    std::int64_t maxCol = 0;
    for (std::size_t j = 0; j < sys.size(); ++j) {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < sys.size(); ++i) c += sys.B(i, j);
        maxCol = std::max(maxCol, c);
    }
    // invariant: lo/2^e <= rho < hi/2^e
    BigInt lo = 0, hi = maxCol + 1;
    unsigned e = 0;
    auto narrow = [&] {
        lo *= 2;
        hi *= 2;
        ++e;
        const BigInt mid = (lo + hi) / 2;
        if (zpoly::shifted_all_positive(s, mid, e)) {
            hi = mid;
        } else {
            lo = mid;
        }
    };
    auto width_ok = [&] {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, e);
        return BigInt((hi - lo) * 1000000000) <= scale;
    };
    while (!width_ok()) narrow();
    auto at = [&](const BigInt& num) {
        Rational x(num, BigInt(1));
        mpq_div_2exp(x.get_mpq_t(), x.get_mpq_t(), e);
        x.canonicalize();
        return x;
    };
    // an algebraic integer that is rational is an integer
    BigInt candidate = lo;
    mpz_cdiv_q_2exp(candidate.get_mpz_t(), lo.get_mpz_t(), e);
    if (at(hi) > Rational(candidate) && zpoly::sign_at(s, Rational(candidate)) == 0) {
        res.exact = Rational(candidate);
        res.lo = res.hi = *res.exact;
        res.lambda = candidate.get_d();
    } else {
        int extra = 0;
        while (zpoly::sign_at(s, at(lo)) * zpoly::sign_at(s, at(hi)) >= 0) {
            if (++extra > 200) throw ComputationError("perron: no sign change in the isolating interval");
            narrow();
        }
        res.lo = at(lo);
        res.hi = at(hi);
        res.lambda = Rational((res.lo + res.hi) / 2).get_d();
    }
    const auto counts = transfer_counts(sys, 41);
    Rational ratio(counts[41], counts[40]);
    ratio.canonicalize();
    res.ratio = ratio.get_d();
    if (std::abs(res.ratio - res.lambda) > kRatioTolerance * res.lambda) {
        throw ComputationError("perron: root " + std::to_string(res.lambda) + " disagrees with growth ratio " +
                               std::to_string(res.ratio));
    }
    res.dimension = std::log2(res.lambda);
    return res;
}

SpectralResult minpoly_of_lambda(SpectralResult res, std::uint64_t workCap) {
    if (res.squarefree.empty()) throw std::invalid_argument("minpoly_of_lambda: no characteristic polynomial");
    const auto fac = zpoly::factor_squarefree(res.squarefree, workCap);
    const std::size_t usable = fac.complete ? fac.factors.size() : fac.factors.size() - 1;
    for (std::size_t i = 0; i < usable; ++i) {
        const ZPoly& g = fac.factors[i];
        const bool hit = res.exact ? zpoly::sign_at(g, *res.exact) == 0
                                   : zpoly::sign_at(g, res.lo) * zpoly::sign_at(g, res.hi) < 0;
        if (hit) {
            res.minpoly = g;
            res.degree = static_cast<std::size_t>(zpoly::degree(g));
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// similarity over F2, polynomials as bit masks (bit i = coefficient of x^i)

namespace {

using Mask = std::uint64_t;

int mdeg(Mask a) { return a ? 63 - __builtin_clzll(a) : -1; }

Mask mmul(Mask a, Mask b) {
    Mask r = 0;
    for (; b; b &= b - 1) r ^= a << __builtin_ctzll(b);
    return r;
}

bool mdivides(Mask a, Mask b, Mask& q) {
    // b / a over F2
    q = 0;
    const int da = mdeg(a);
    while (mdeg(b) >= da) {
        const int s = mdeg(b) - da;
        q |= Mask{1} << s;
        b ^= a << s;
    }
    return b == 0;
}

Mask to_mask(const FpPoly& f) {
    if (f.degree() > 63) throw std::invalid_argument("similarity: degree too large");
    Mask m = 0;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i]) m |= Mask{1} << i;
    }
    return m;
}

FpPoly from_mask(Mask m) {
    std::vector<Residue> c;
    for (int i = 0; i <= mdeg(m); ++i) c.push_back(static_cast<Residue>((m >> i) & 1));
    return FpPoly(Prime(2), std::move(c));
}

Mask reverse(Mask m) {
    const int d = mdeg(m);
    Mask r = 0;
    for (int i = 0; i <= d; ++i) {
        if ((m >> i) & 1) r |= Mask{1} << (d - i);
    }
    return r;
}

/// Irreducible factors with multiplicities, by trial division in increasing degree.
std::vector<std::pair<Mask, int>> factor_f2(Mask f) {
    std::vector<std::pair<Mask, int>> out;
    for (Mask cand = 2; mdeg(cand) * 2 <= mdeg(f); ++cand) {
        int mult = 0;
        Mask q;
        while (mdivides(cand, f, q)) {
            f = q;
            ++mult;
        }
        if (mult) out.emplace_back(cand, mult);
    }
    if (mdeg(f) > 0) {
        bool merged = false;
        for (auto& [g, k] : out) {
            if (g == f) {
                ++k;
                merged = true;
            }
        }
        if (!merged) out.emplace_back(f, 1);
    }
    return out;
}

std::optional<Mask> strip_step(Mask m) {
    if (m == 0 || (m & 1)) return std::nullopt;
    return m >> __builtin_ctzll(m);
}

std::optional<Mask> root_step(Mask m) {
    if (mdeg(m) < 2) return std::nullopt;
    const auto fac = factor_f2(m);
    int g = 0;
    for (const auto& [p, k] : fac) g = std::gcd(g, k);
    if (g <= 1) return std::nullopt;
    Mask r = 1;
    for (const auto& [p, k] : fac) {
        for (int i = 0; i < k / g; ++i) r = mmul(r, p);
    }
    return r;
}

std::optional<Mask> desub_step(Mask m) {
    if (!(m & 1) || mdeg(m) < 2) return std::nullopt;
    int g = 0;
    for (int i = 1; i <= mdeg(m); ++i) {
        if ((m >> i) & 1) g = std::gcd(g, i);
    }
    if (g <= 1) return std::nullopt;
    Mask r = 0;
    for (int i = 0; i <= mdeg(m); i += g) {
        if ((m >> i) & 1) r |= Mask{1} << (i / g);
    }
    return r;
}

std::vector<int> exponents(Mask m) {
    std::vector<int> e;
    for (int i = 0; i <= mdeg(m); ++i) {
        if ((m >> i) & 1) e.push_back(i);
    }
    return e;
}

bool mask_less(Mask a, Mask b) {
    if (mdeg(a) != mdeg(b)) return mdeg(a) < mdeg(b);
    const auto ea = exponents(a), eb = exponents(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

bool canonical_less(const FpPoly& a, const FpPoly& b) { return mask_less(to_mask(a), to_mask(b)); }

SimilarityClass canonicalize(const FpPoly& f) {
    if (f.prime().value() != 2) throw std::invalid_argument("canonicalize: p must be 2");
    if (f.is_zero()) throw std::invalid_argument("canonicalize: zero polynomial");
    const Mask start = to_mask(f);
    std::map<Mask, std::pair<Mask, const char*>> parent;
    parent[start] = {start, nullptr};
    std::deque<Mask> queue{start};
    std::optional<Mask> best;
    while (!queue.empty()) {
        const Mask m = queue.front();
        queue.pop_front();
        const auto s = strip_step(m);
        const auto r = root_step(m);
        const auto d = desub_step(m);
        if (!s && !r && !d && (!best || mask_less(m, *best))) best = m;
        const std::pair<std::optional<Mask>, const char*> moves[] = {
            {s, "shift"}, {r, "root"}, {d, "desubstitution"}, {reverse(m) != m ? std::optional<Mask>(reverse(m)) : std::nullopt, "reversal"}};
        for (const auto& [next, name] : moves) {
            if (next && !parent.count(*next)) {
                parent[*next] = {m, name};
                queue.push_back(*next);
            }
        }
    }
    SimilarityClass out;
    out.canonical = from_mask(*best);
    for (Mask m = *best; m != start; m = parent[m].first) out.witnesses.push_back(parent[m].second);
    std::reverse(out.witnesses.begin(), out.witnesses.end());
    return out;
}

std::vector<SimilarityClass> enumerate_classes(std::size_t maxDeg) {
    if (maxDeg < 1) throw std::invalid_argument("enumerate_classes: maxDeg must be >= 1");
    if (maxDeg > 24) throw std::invalid_argument("enumerate_classes: maxDeg too large");
    std::vector<Mask> reps;
    for (std::size_t d = 1; d <= maxDeg; ++d) {
        for (Mask mid = 0; mid < (Mask{1} << (d - 1)); ++mid) {
            const Mask m = 1 | (mid << 1) | (Mask{1} << d);
            const Mask c = to_mask(canonicalize(from_mask(m)).canonical);
            if (c == m) reps.push_back(m);
        }
    }
    std::sort(reps.begin(), reps.end(), mask_less);
    std::vector<SimilarityClass> out;
    for (Mask m : reps) out.push_back({from_mask(m), {}});
    return out;
}

double eigen_bound(std::size_t degF) {
    if (degF < 1) throw std::invalid_argument("eigen_bound: degree must be >= 1");
    std::size_t k = 0;
    while ((std::size_t{1} << k) < degF) ++k;
    const double kk = static_cast<double>(k);
    return 4 * std::pow(1 - std::pow(2.0, -(kk + 2)), 1 / (kk + 1));
}

SurveyResult survey(std::size_t maxDeg, std::size_t K, std::uint64_t workCap) {
    SurveyResult out;
    double best = 0;
    std::size_t deg = 1;
    for (const auto& cls : enumerate_classes(maxDeg)) {
        const std::size_t d = static_cast<std::size_t>(cls.canonical.degree());
        while (deg < d) {
            out.lambdaMax.emplace_back(deg, best);
            ++deg;
        }
        SurveyRow row;
        row.poly = cls.canonical;
        const TransferSystem sys = trim(build_transfer(cls.canonical));
        row.states = sys.size();
        row.spectrum = minpoly_of_lambda(perron(sys), workCap);
        row.boundOk = row.spectrum.lambda <= eigen_bound(d) + 1e-12;
        row.countsOk = verify_counts(sys, K).ok;
        best = std::max(best, row.spectrum.lambda);
        out.rows.push_back(std::move(row));
    }
    for (; deg <= maxDeg; ++deg) out.lambdaMax.emplace_back(deg, best);
    return out;
}

std::string survey_tsv(const SurveyResult& s) {
    std::string out = "poly\tlambda\tdegree\tdimension\tbound_ok\n";
    char buf[64];
    for (const auto& r : s.rows) {
        out += format_poly(r.poly);
        std::snprintf(buf, sizeof buf, "\t%.6f\t", r.spectrum.lambda);
        out += buf;
        out += r.spectrum.degree ? std::to_string(*r.spectrum.degree) : "PENDING";
        std::snprintf(buf, sizeof buf, "\t%.6f\t", r.spectrum.dimension);
        out += buf;
        out += r.boundOk ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace coeffpat
