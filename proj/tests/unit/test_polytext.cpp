#include "coeffpat/error.hpp"
#include "coeffpat/polytext.hpp"
#include "doctest.h"

using namespace coeffpat;

TEST_CASE("parse both formats") {
    const Prime two(2);
    CHECK(parse_poly("1+x+x^2", two).coeffs() == std::vector<Residue>{1, 1, 1});
    CHECK(parse_poly("1,1,0,1", two).coeffs() == std::vector<Residue>{1, 1, 0, 1});
    CHECK(parse_poly("3+x", two).coeffs() == std::vector<Residue>{1, 1});
    CHECK(parse_poly(" x^3 + 1 ", two).coeffs() == std::vector<Residue>{1, 0, 0, 1});
    CHECK(parse_poly("2x^2+3*x+4", Prime(5)).coeffs() == std::vector<Residue>{4, 3, 2});
    CHECK(parse_poly("1-x", Prime(3)).coeffs() == std::vector<Residue>{1, 2});
    CHECK(parse_poly("x+x", Prime(3)).coeffs() == std::vector<Residue>{0, 2});
}

TEST_CASE("parse errors name the token") {
    const Prime two(2);
    CHECK_THROWS_AS(parse_poly("", two), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", two), ParseError);
    CHECK_THROWS_AS(parse_poly("2", two), ParseError);
    CHECK_THROWS_AS(parse_poly("1,,1", two), ParseError);
    try {
        parse_poly("1+y^2", two);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("y^2") != std::string::npos);
    }
}

TEST_CASE("format round trip") {
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const Prime P(p);
        for (unsigned mask = 1; mask < 200; ++mask) {
            std::vector<Residue> c;
            for (unsigned m = mask; m; m /= p) c.push_back(m % p);
            const FpPoly f(P, c);
            if (f.is_zero()) continue;
            CHECK(parse_poly(format_poly(f), P) == f);
            CHECK(parse_poly(format_coeff_list(f), P) == f);
        }
    }
    CHECK(format_poly(FpPoly(Prime(2), {1, 1, 0, 1})) == "1+x+x^3");
    CHECK(format_poly(FpPoly(Prime(5), {2, 0, 1})) == "2+x^2");
}
