#pragma once

// Univariate polynomials over GF(p).  Coefficients are stored lowest degree
// first and kept trimmed: the zero polynomial is the empty vector, and the
// degree of a nonzero polynomial is size()-1.

#include <vector>

#include "listdec/field.hpp"
#include "listdec/rng.hpp"

namespace listdec {

struct Poly {
    std::vector<u32> c;

    Poly() = default;
    explicit Poly(std::vector<u32> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    int deg() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    u32 coeff(size_t j) const { return j < c.size() ? c[j] : 0; }

    bool operator==(const Poly&) const = default;
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_scale(const Field& F, const Poly& a, u32 k);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

// Horner evaluation.
u32 eval(const Field& F, const Poly& P, u32 x);

// i-th Hasse derivative: coefficient j of the result is C(j+i, i) * P_{j+i}.
Poly hasse_derivative(const Field& F, const Poly& P, u32 i);

// Order on padded coefficient vectors, lowest degree first.
bool lex_less(const Poly& a, const Poly& b);

// Uniform polynomial of degree at most max_deg (each coefficient uniform).
Poly random_poly(const Field& F, Rng& rng, u32 max_deg);

}  // namespace listdec
