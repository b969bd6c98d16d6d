#include "coeffpat/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace coeffpat {

Family Family::one_plus_x(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("Family::one_plus_x: not a prime");
    return {Kind::OnePlusX, p};
}

std::string Family::name() const {
    if (kind == Kind::OnePlusXPlusX2Mod2) return "1+x+x^2 mod 2";
    return "1+x mod " + std::to_string(p);
}

PiecewiseQuadratic::PiecewiseQuadratic(std::uint32_t p, std::vector<QuadPiece> pieces)
    : p_(p), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("PiecewiseQuadratic: no pieces");
    for (const auto& q : pieces_) {
        if (q.hi < q.lo) throw std::invalid_argument("PiecewiseQuadratic: reversed interval");
    }
}

Rational PiecewiseQuadratic::operator()(Rational x) const {
    if (sgn(x) <= 0) throw std::invalid_argument("limit function needs x > 0");
    const Rational lo(1, p_);
    while (x < lo) x *= p_;
    while (x > 1) x /= p_;
    for (const auto& q : pieces_) {
        if (x >= q.lo && x <= q.hi) return q(x);
    }
    throw std::logic_error("PiecewiseQuadratic: x not covered");
}

bool PiecewiseQuadratic::is_continuous() const {
    if (pieces_.front().lo != make_rational(1, p_) || pieces_.back().hi != 1) return false;
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const auto& a = pieces_[i - 1];
        const auto& b = pieces_[i];
        if (a.hi != b.lo || a(a.hi) != b(b.lo)) return false;
    }
    return true;
}

bool PiecewiseQuadratic::is_periodic() const {
    return pieces_.front()(make_rational(1, p_)) == pieces_.back()(Rational(1));
}

namespace {

// a (x - h)^2 + k expanded
QuadPiece vertex_form(Rational lo, Rational hi, const Rational& a, const Rational& h, const Rational& k) {
    return {std::move(lo), std::move(hi), a, -2 * a * h, a * h * h + k};
}

Rational R(long n, long d = 1) { return make_rational(n, d); }

struct OnePlusXData {
    Rational a2, h2, k2;
    Rational a3, h3, k3;
};

OnePlusXData one_plus_x_data(std::uint32_t pp) {
    const Rational p = pp;
    const Rational d2 = 7 * p * p * p - 8 * p * p - 9 * p + 18;
    const Rational d3 = p * p + 2 * p + 5;
    OnePlusXData out;
    out.a2 = -(p - 1) * d2 / (4 * (p + 1));
    out.h2 = (p + 1) * (3 * p * p - 7 * p + 6) / d2;
    out.k2 = (p - 1) * (p * p * p * p * p + 5 * p * p * p * p - 8 * p * p * p - 15 * p * p + 39 * p - 18) / (2 * d2);
    out.a3 = (p - 2) * (p - 1) * d3 / (4 * (p + 1));
    out.h3 = (p + 1) * (p + 1) / d3;
    out.k3 = (p - 1) * (p * p * p + 4 * p * p + 3 * p - 4) / (2 * d3);
    for (Rational* q : {&out.a2, &out.h2, &out.k2, &out.a3, &out.h3, &out.k3}) q->canonicalize();
    return out;
}

}  // namespace

PiecewiseQuadratic limit_function(const Family& family) {
    if (family.kind == Family::Kind::OnePlusXPlusX2Mod2) {
        return PiecewiseQuadratic(2, {
                                         {R(1, 2), R(2, 3), R(-5, 12), R(1, 2), R(5, 4)},
                                         {R(2, 3), R(1), R(7, 48), R(-1, 4), R(3, 2)},
                                     });
    }
    const std::uint32_t pp = family.p;
    if (pp == 2) return PiecewiseQuadratic(2, {{R(1, 2), R(1), R(0), R(0), R(1)}});
    const Rational p = pp;
    const auto d = one_plus_x_data(pp);
    std::vector<QuadPiece> pieces;
    if (pp > 3) {
        // stored expanded; at p = 5 the quadratic term vanishes
        Rational A = p * p * (p - 5) * (p - 1) / (2 * (p + 1));
        Rational B = p * (p - 1);
        Rational C = (p - 1) * (p - 1) / 2;
        A.canonicalize();
        C.canonicalize();
        pieces.push_back({make_rational(1, pp), R(1, 3), A, B, C});
    }
    pieces.push_back(vertex_form(R(1, 3), R(1, 2), d.a2, d.h2, d.k2));
    pieces.push_back(vertex_form(R(1, 2), R(1), d.a3, d.h3, d.k3));
    return PiecewiseQuadratic(pp, std::move(pieces));
}

ExtremaResult extrema(const Family& family) {
    if (family.kind == Family::Kind::OnePlusXPlusX2Mod2) return {R(39, 28), R(7, 5), R(6, 7), R(3, 5)};
    if (family.p == 2) return {R(1), R(1), R(1, 2), R(1, 2)};
    const auto d = one_plus_x_data(family.p);
    return {d.k3, d.k2, d.h3, d.h2};
}

ExtremaResult extrema_of(const PiecewiseQuadratic& L) {
    bool first = true;
    ExtremaResult out;
    auto consider = [&](const Rational& x, const Rational& v) {
        if (first || v < out.inf || (v == out.inf && x < out.argInf)) {
            out.inf = v;
            out.argInf = x;
        }
        if (first || v > out.sup || (v == out.sup && x < out.argSup)) {
            out.sup = v;
            out.argSup = x;
        }
        first = false;
    };
    for (const auto& q : L.pieces()) {
        consider(q.lo, q(q.lo));
        consider(q.hi, q(q.hi));
        if (sgn(q.A) != 0) {
            Rational v = -q.B / (2 * q.A);
            v.canonicalize();
            if (v >= q.lo && v <= q.hi) consider(v, q(v));
        }
    }
    return out;
}

RecursionSpec family_recursion(const Family& family) {
    return family.kind == Family::Kind::OnePlusXPlusX2Mod2 ? recursion_1xx2_mod2() : recursion_1px(family.p);
}

namespace {

BigInt floor_power_over(std::uint32_t p, std::uint32_t k, const Rational& x) {
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    BigInt n = pk * x.get_den();
    mpz_fdiv_q(n.get_mpz_t(), n.get_mpz_t(), x.get_num().get_mpz_t());
    return n;
}

double ratio_of(const BigInt& a, const BigInt& n) {
    Rational q(a, BigInt(n * n));
    q.canonicalize();
    return q.get_d();
}

}  // namespace

double empirical_ratio(const RecursionSpec& rec, const Rational& x, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("empirical_ratio: k must be at least 1");
    if (sgn(x) <= 0) throw std::invalid_argument("empirical_ratio: x must be positive");
    const BigInt n = floor_power_over(rec.p, k, x);
    return ratio_of(a_from_recursion(rec, to_u64(n)), n);
}

std::vector<OscillationRow> oscillation_table(const RecursionSpec& rec, std::uint32_t samplesPerOctave,
                                              std::uint32_t kMax) {
    if (samplesPerOctave < 1) throw std::invalid_argument("oscillation_table: samplesPerOctave must be >= 1");
    const double scale = 1 << 20;
    std::vector<Rational> grid;
    for (std::uint32_t j = 0; j < samplesPerOctave; ++j) {
        const double x = std::pow(static_cast<double>(rec.p), -static_cast<double>(j) / samplesPerOctave);
        Rational q(static_cast<long>(std::llround(x * scale)), 1l << 20);
        q.canonicalize();
        grid.push_back(q);
    }
    std::vector<OscillationRow> rows;
    const double logp = std::log(static_cast<double>(rec.p));
    for (std::uint32_t k = 1; k <= kMax; ++k) {
        for (const auto& x : grid) {
            OscillationRow row;
            row.x = x;
            row.n = floor_power_over(rec.p, k, x);
            row.a = a_from_recursion(rec, to_u64(row.n));
            row.logn = std::log(row.n.get_d()) / logp;
            row.ratio = ratio_of(row.a, row.n);
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return rows;
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string oscillation_csv(const std::vector<OscillationRow>& rows) {
    std::string out = "logn,ratio\n";
    for (const auto& r : rows) {
        out += format_g12(r.logn);
        out += ',';
        out += format_g12(r.ratio);
        out += '\n';
    }
    return out;
}

}  // namespace coeffpat
