#include "coeffpat/polytext.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "coeffpat/error.hpp"

namespace coeffpat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_uint(std::string_view s, unsigned long long& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void bad_token(std::string_view token, std::string_view why) {
    throw ParseError("malformed polynomial term '" + std::string(token) + "': " + std::string(why));
}

FpPoly parse_list(std::string_view text, Prime p) {
    std::vector<long long> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(start, comma - start));
        bool negative = false;
        std::string_view digits = tok;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            negative = digits.front() == '-';
            digits.remove_prefix(1);
        }
        unsigned long long v = 0;
        if (!parse_uint(digits, v)) bad_token(tok, "expected an integer coefficient");
        const long long m = p.value();
        long long r = static_cast<long long>(v % static_cast<unsigned long long>(m));
        coeffs.push_back(negative ? (m - r) % m : r);
        start = comma + 1;
    }
    return FpPoly::from_ints(p, coeffs);
}

FpPoly parse_monomials(std::string_view text, Prime p) {
    std::map<unsigned long long, unsigned long long> terms;
    const unsigned long long m = p.value();
    std::size_t pos = 0;
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    std::string_view s = compact;
    if (s.empty()) throw ParseError("empty polynomial");
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            // a '-' directly after '^' is a negative exponent; keep it in the token
            if (s[end] == '^' && end + 1 < s.size() && s[end + 1] == '-') ++end;
            ++end;
        }
        std::string_view tok = s.substr(pos, end - pos);
        if (tok.empty()) bad_token(s.substr(pos == 0 ? 0 : pos - 1, 1), "missing term");
        unsigned long long coeff = 1;
        unsigned long long exponent = 0;
        const std::size_t xpos = tok.find('x');
        if (xpos == std::string_view::npos) {
            if (!parse_uint(tok, coeff)) bad_token(tok, "expected an integer or a monomial in x");
        } else {
            std::string_view head = tok.substr(0, xpos);
            if (!head.empty() && head.back() == '*') head.remove_suffix(1);
            if (!head.empty() && !parse_uint(head, coeff)) bad_token(tok, "bad coefficient");
            std::string_view tail = tok.substr(xpos + 1);
            if (tail.empty()) {
                exponent = 1;
            } else {
                if (tail.front() != '^') bad_token(tok, "expected '^' after x");
                tail.remove_prefix(1);
                if (!tail.empty() && tail.front() == '-') bad_token(tok, "negative exponent");
                if (!parse_uint(tail, exponent)) bad_token(tok, "bad exponent");
                if (exponent > (1ull << 28)) bad_token(tok, "exponent too large");
            }
        }
        coeff %= m;
        if (negative) coeff = (m - coeff) % m;
        terms[exponent] = (terms[exponent] + coeff) % m;
        pos = end;
    }
    std::vector<Residue> out(terms.rbegin()->first + 1, 0);
    for (auto [e, c] : terms) out[e] = static_cast<Residue>(c);
    return FpPoly(p, std::move(out));
}

}  // namespace

FpPoly parse_poly(std::string_view text, Prime p) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty polynomial");
    FpPoly f = text.find(',') != std::string_view::npos ? parse_list(text, p) : parse_monomials(text, p);
    if (f.is_zero()) throw ParseError("polynomial '" + std::string(text) + "' reduces to zero mod " + std::to_string(p.value()));
    return f;
}

std::string format_poly(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Residue c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

std::string format_coeff_list(const FpPoly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace coeffpat
