#include "listdec/decoder.hpp"

#include <algorithm>

#include "listdec/bounds.hpp"

namespace listdec {

namespace {

// Smallest D with (m+1)(D+1) + d >= N+1, so the constraint matrix has more
// unknowns than rows and a nonzero kernel is guaranteed by counting.
u32 interpolation_degree(u64 constraints, u32 d, u32 m) {
    u64 need = constraints + 1 > d ? constraints + 1 - d : 1;
    u64 dp1 = (need + m) / (m + 1);
    if (dp1 == 0) dp1 = 1;
    return (u32)(dp1 - 1);
}

// First nonzero kernel vector of the constraint matrix under the fixed
// elimination order; its blocks are the interpolation polynomials.
std::vector<u32> interpolation_solution(const Field& F, Matrix& C) {
    auto kern = kernel_basis(F, std::move(C));
    ensure(!kern.empty(), "interpolation: empty kernel (dimension counting violated)");
    return std::move(kern.front());
}

CandidateSpace extract_space(const Field& F, Matrix M, const std::vector<u32>& rhs, u32 m,
                             u32 D) {
    CandidateSpace cs;
    cs.m = m;
    cs.D = D;
    auto sol = solve_affine(F, std::move(M), rhs);
    if (!sol) {
        cs.empty = true;  // no codeword within the guaranteed radius
        return cs;
    }
    cs.offset = Poly(std::move(sol->particular));
    cs.basis.reserve(sol->kernel.size());
    for (auto& v : sol->kernel) cs.basis.emplace_back(std::move(v));
    ensure(cs.basis.size() + 1 <= m, "candidate space dimension exceeds m-1");
    return cs;
}

}  // namespace

CandidateSpace frs_list_recover(const FrsParams& P, const RecoverySets& S, u32 m) {
    const Field& F = P.field;
    require(m >= 1 && m <= P.s, "decode: need 1 <= m <= s");
    require(P.d + 1 < P.field.p, "decode: need d < q-1");
    require(S.n == P.n && S.s == P.s, "decode: recovery sets shape mismatch");
    for (const auto& set : S.sets)
        for (const auto& cand : set)
            for (u32 v : cand) require(v < F.p, "decode: candidate entry out of range");

    u64 total_candidates = 0;
    for (const auto& set : S.sets) total_candidates += set.size();
    const u32 win = P.s - m + 1;  // constraint windows per column
    const u64 N = total_candidates * win;
    const u32 D = interpolation_degree(N, P.d, m);
    const u32 len0 = D + P.d + 1, lenk = D + 1;
    const u64 U = len0 + (u64)m * lenk;

    Matrix C((u32)N, (u32)U);
    std::vector<u32> xpow(len0);
    u32 row = 0;
    for (u32 i = 0; i < P.n; ++i) {
        for (const auto& cand : S.sets[i]) {
            for (u32 j = 0; j < win; ++j) {
                const u32 x = P.point(i * P.s + j);
                xpow[0] = 1 % F.p;
                for (u32 t = 1; t < len0; ++t) xpow[t] = F.mul(xpow[t - 1], x);
                u32* out = C.row(row);
                std::copy(xpow.begin(), xpow.end(), out);
                for (u32 k = 1; k <= m; ++k) {
                    const u32 val = cand[j + k - 1];
                    if (val == 0) continue;
                    u32* blk = out + len0 + (size_t)(k - 1) * lenk;
                    for (u32 u = 0; u < lenk; ++u) blk[u] = F.mul(val, xpow[u]);
                }
                ++row;
            }
        }
    }

    const auto Q = interpolation_solution(F, C);

    // A_0(X) + sum_k A_k(X) f(alpha^{k-1} X) == 0, linear in the d+1
    // coefficients of f: column j of the system picks up A_k shifted by j and
    // scaled by alpha^{(k-1) j}.
    Matrix M(len0, P.d + 1);
    std::vector<u32> rhs(len0);
    for (u32 t = 0; t < len0; ++t) rhs[t] = F.neg(Q[t]);
    for (u32 k = 1; k <= m; ++k) {
        const u32* Ak = Q.data() + len0 + (size_t)(k - 1) * lenk;
        const u32 gamma = F.pow(F.alpha, k - 1);
        u32 g = 1 % F.p;
        for (u32 j = 0; j <= P.d; ++j) {
            for (u32 u = 0; u < lenk; ++u)
                M.at(u + j, j) = F.reduce(M.at(u + j, j) + (u64)Ak[u] * g);
            g = F.mul(g, gamma);
        }
    }
    return extract_space(F, std::move(M), rhs, m, D);
}

CandidateSpace frs_list_decode(const FrsParams& P, const Codeword& y, u32 m) {
    require(y.n == P.n && y.s == P.s, "decode: received word shape mismatch");
    return frs_list_recover(P, RecoverySets::singletons(y), m);
}

CandidateSpace mult_list_decode(const MultParams& P, const Codeword& y, u32 m) {
    const Field& F = P.field;
    require(m >= 1 && m <= P.s, "decode: need 1 <= m <= s");
    require(F.p > P.d, "mult decode: unsupported parameters, need q > d");
    require(y.n == P.n && y.s == P.s, "decode: received word shape mismatch");
    for (u32 v : y.a) require(v < F.p, "decode: received entry out of range");

    const u32 win = P.s - m + 1;
    const u64 N = (u64)P.n * win;
    const u32 D = interpolation_degree(N, P.d, m);
    const u32 len0 = D + P.d + 1, lenk = D + 1;
    const u64 U = len0 + (u64)m * lenk;

    // Pascal table up to the largest degree that appears.
    const u32 brows = std::max(len0, P.s);
    const u32 bcols = P.s + 1;
    std::vector<u32> bin((size_t)brows * bcols, 0);
    for (u32 a = 0; a < brows; ++a) {
        bin[(size_t)a * bcols] = 1 % F.p;
        for (u32 b = 1; b <= std::min(a, P.s); ++b)
            bin[(size_t)a * bcols + b] =
                F.add(bin[(size_t)(a - 1) * bcols + b - 1],
                      b <= a - 1 ? bin[(size_t)(a - 1) * bcols + b] : 0);
    }
    auto binom = [&](u32 a, u32 b) { return b > a ? 0u : bin[(size_t)a * bcols + b]; };

    Matrix C((u32)N, (u32)U);
    std::vector<u32> pw(len0);
    std::vector<u32> wv(win);
    u32 row = 0;
    for (u32 i = 0; i < P.n; ++i) {
        const u32 x = P.points[i];
        pw[0] = 1 % F.p;
        for (u32 t = 1; t < len0; ++t) pw[t] = F.mul(pw[t - 1], x);
        for (u32 j = 0; j < win; ++j) {
            u32* out = C.row(row);
            // order-j Hasse derivative of A_0 at x
            for (u32 u = j; u < len0; ++u) out[u] = F.mul(binom(u, j), pw[u - j]);
            for (u32 k = 1; k <= m; ++k) {
                // product rule: (A_k * f^{(k-1)})^{(j)} picks up the received
                // rows k-1+v weighted by the composition binomial C(k-1+v, v)
                for (u32 v = 0; v <= j; ++v)
                    wv[v] = F.mul(binom(k - 1 + v, v), y.at(i, k - 1 + v));
                u32* blk = out + len0 + (size_t)(k - 1) * lenk;
                for (u32 u = 0; u < lenk; ++u) {
                    u64 acc = 0;
                    for (u32 v = 0; v <= j; ++v) {
                        const u32 jj = j - v;
                        if (u < jj) continue;
                        acc = F.reduce(acc + (u64)wv[v] * F.mul(binom(u, jj), pw[u - jj]));
                    }
                    blk[u] = (u32)acc;
                }
            }
            ++row;
        }
    }

    const auto Q = interpolation_solution(F, C);

    // A_0 + sum_k A_k f^{(k-1)} == 0; coefficient j of f enters row t with
    // weight sum_k C(j, k-1) A_{k, t-j+k-1}.
    Matrix M(len0, P.d + 1);
    std::vector<u32> rhs(len0);
    for (u32 t = 0; t < len0; ++t) rhs[t] = F.neg(Q[t]);
    for (u32 k = 1; k <= m; ++k) {
        const u32* Ak = Q.data() + len0 + (size_t)(k - 1) * lenk;
        for (u32 j = 0; j <= P.d; ++j) {
            const u32 cjk = binom(j, k - 1);
            if (cjk == 0) continue;
            for (u32 u = 0; u < lenk; ++u) {
                const i64 t = (i64)u + j - (k - 1);
                if (t < 0) continue;
                M.at((u32)t, j) = F.reduce(M.at((u32)t, j) + (u64)cjk * Ak[u]);
            }
        }
    }
    return extract_space(F, std::move(M), rhs, m, D);
}

namespace {

RadiusThreshold radius_threshold_impl(u32 s, u32 n, u32 d, Rational rate, u32 m, u32 ell) {
    require(m >= 1 && m <= s, "radius: need 1 <= m <= s");
    require(ell >= 1, "radius: need ell >= 1");
    const u32 win = s - m + 1;
    const u64 N = (u64)n * ell * win;
    const u32 D = interpolation_degree(N, d, m);
    const u32 t_min = (u32)(((u64)D + d) / win) + 1;
    RadiusThreshold rt{D, t_min, (i64)n - (i64)t_min};
    if (ell == 1) {
        // Quantization sanity: the guarantee loses at most one column against
        // the closed-form radius.
        Rational rho = frs_radius(m, s, rate);
        i64 ref = (Rational(n) * rho).floor();
        ensure(rt.max_errors >= ref - 1, "radius: guarantee drifted below the closed form");
    }
    return rt;
}

}  // namespace

RadiusThreshold radius_threshold(const FrsParams& P, u32 m, u32 ell) {
    return radius_threshold_impl(P.s, P.n, P.d, P.rate(), m, ell);
}

RadiusThreshold radius_threshold(const MultParams& P, u32 m) {
    return radius_threshold_impl(P.s, P.n, P.d, P.rate(), m, 1);
}

bool space_contains(const Field& F, const CandidateSpace& space, const Poly& f) {
    if (space.empty) return false;
    if (space.basis.empty()) return f == space.offset;
    size_t rows = std::max(space.offset.c.size(), f.c.size());
    for (const auto& b : space.basis) rows = std::max(rows, b.c.size());
    Matrix A((u32)rows, (u32)space.basis.size());
    std::vector<u32> rhs(rows);
    for (u32 r = 0; r < rows; ++r) {
        for (u32 t = 0; t < space.basis.size(); ++t) A.at(r, t) = space.basis[t].coeff(r);
        rhs[r] = F.sub(f.coeff(r), space.offset.coeff(r));
    }
    return solve_affine(F, std::move(A), rhs).has_value();
}

Poly space_member(const Field& F, const CandidateSpace& space, std::span<const u32> lambda) {
    require(!space.empty, "space_member: empty space");
    require(lambda.size() == space.basis.size(), "space_member: coordinate count mismatch");
    Poly out = space.offset;
    for (size_t t = 0; t < lambda.size(); ++t)
        out = poly_add(F, out, poly_scale(F, space.basis[t], lambda[t]));
    return out;
}

}  // namespace listdec
