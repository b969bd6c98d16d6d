#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coeffpat::reference {

struct LambdaRow {
    const char* poly;
    double lambda;
    std::size_t degree;
};

// p = 2, canonical polynomials of degree <= 6: lambda to five printed decimals
// and the degree of its minimal polynomial.
inline const std::vector<LambdaRow>& lambda_table() {
    static const std::vector<LambdaRow> rows{
        {"1+x", 3, 1},
        {"1+x+x^2", 3.23607, 2},
        {"1+x+x^3", 3.31142, 4},
        {"1+x+x^4", 3.33159, 5},
        {"1+x+x^2+x^4", 3.3788, 7},
        {"1+x+x^3+x^4", 3.47662, 4},
        {"1+x+x^2+x^3+x^4", 3.45729, 4},
        {"1+x+x^5", 3.35174, 10},
        {"1+x^2+x^5", 3.46127, 12},
        {"1+x+x^2+x^5", 3.49563, 7},
        {"1+x+x^3+x^5", 3.45469, 12},
        {"1+x^2+x^3+x^5", 3.46639, 5},
        {"1+x+x^2+x^3+x^5", 3.5229, 14},
        {"1+x+x^2+x^4+x^5", 3.47168, 11},
        {"1+x+x^2+x^3+x^4+x^5", 3.52951, 6},
        {"1+x+x^6", 3.45686, 20},
        {"1+x+x^2+x^6", 3.49009, 20},
        {"1+x+x^3+x^6", 3.50478, 10},
        {"1+x^2+x^3+x^6", 3.53521, 20},
        {"1+x+x^2+x^3+x^6", 3.53141, 19},
        {"1+x+x^4+x^6", 3.50468, 17},
        {"1+x+x^2+x^4+x^6", 3.55002, 19},
        {"1+x+x^3+x^4+x^6", 3.59415, 16},
        {"1+x^2+x^3+x^4+x^6", 3.53665, 15},
        {"1+x+x^2+x^3+x^4+x^6", 3.59043, 11},
        {"1+x+x^5+x^6", 3.54536, 14},
        {"1+x+x^2+x^5+x^6", 3.50809, 18},
        {"1+x+x^2+x^3+x^5+x^6", 3.57066, 17},
        {"1+x+x^2+x^4+x^5+x^6", 3.49995, 6},
        {"1+x+x^2+x^3+x^4+x^5+x^6", 3.5598, 6},
    };
    return rows;
}

/// nullptr when the polynomial is not in the table.
inline const LambdaRow* lambda_row(const std::string& poly) {
    for (const auto& r : lambda_table())
        if (poly == r.poly) return &r;
    return nullptr;
}

}  // namespace coeffpat::reference
