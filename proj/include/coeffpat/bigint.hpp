#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace coeffpat {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt to_bigint(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt to_bigint(std::int64_t v) {
    if (v >= 0) return to_bigint(static_cast<std::uint64_t>(v));
    return -to_bigint(static_cast<std::uint64_t>(-(v + 1)) + 1u);
}

// Throws std::overflow_error when the value does not fit.
std::uint64_t to_u64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace coeffpat
