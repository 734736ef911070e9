#include "listdec/poly.hpp"

#include <algorithm>

namespace listdec {

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u32> out(std::max(a.c.size(), b.c.size()));
    for (size_t j = 0; j < out.size(); ++j) out[j] = F.add(a.coeff(j), b.coeff(j));
    return Poly(std::move(out));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u32> out(std::max(a.c.size(), b.c.size()));
    for (size_t j = 0; j < out.size(); ++j) out[j] = F.sub(a.coeff(j), b.coeff(j));
    return Poly(std::move(out));
}

Poly poly_neg(const Field& F, const Poly& a) {
    std::vector<u32> out(a.c.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = F.neg(a.c[j]);
    return Poly(std::move(out));
}

Poly poly_scale(const Field& F, const Poly& a, u32 k) {
    std::vector<u32> out(a.c.size());
    for (size_t j = 0; j < out.size(); ++j) out[j] = F.mul(a.c[j], k);
    return Poly(std::move(out));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<u32> out(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = F.reduce(out[i + j] + (u64)a.c[i] * b.c[j]);
    }
    return Poly(std::move(out));
}

u32 eval(const Field& F, const Poly& P, u32 x) {
    u32 acc = 0;
    for (size_t j = P.c.size(); j-- > 0;) acc = F.reduce((u64)acc * x + P.c[j]);
    return acc;
}

Poly hasse_derivative(const Field& F, const Poly& P, u32 i) {
    if (i == 0) return P;
    if ((int)i > P.deg()) return {};
    std::vector<u32> out(P.c.size() - i);
    for (size_t j = 0; j < out.size(); ++j) out[j] = F.mul(F.binom(j + i, i), P.c[j + i]);
    return Poly(std::move(out));
}

bool lex_less(const Poly& a, const Poly& b) {
    size_t len = std::max(a.c.size(), b.c.size());
    for (size_t j = 0; j < len; ++j) {
        u32 x = a.coeff(j), y = b.coeff(j);
        if (x != y) return x < y;
    }
    return false;
}

Poly random_poly(const Field& F, Rng& rng, u32 max_deg) {
    std::vector<u32> out(max_deg + 1);
    for (auto& v : out) v = (u32)rng.below(F.p);
    return Poly(std::move(out));
}

}  // namespace listdec
