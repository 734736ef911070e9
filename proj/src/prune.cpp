#include "listdec/prune.hpp"

#include <algorithm>
#include <set>

#include "listdec/bounds.hpp"

namespace listdec {

namespace {

void check_shape(const CandidateSpace& space, const RecoverySets& S) {
    (void)space;
    require(S.n >= 1, "prune: empty recovery sets");
}

std::vector<Codeword> encode_family(const std::vector<Poly>& polys, const EncodeFn& encode) {
    std::vector<Codeword> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(encode(f));
    return out;
}

}  // namespace

std::vector<Poly> prune(const Field& F, const CandidateSpace& space, const RecoverySets& S,
                        Rational rho, const PruneConfig& cfg, const EncodeFn& encode) {
    require(rho < Rational(1), "prune: rho must be < 1");
    require(rho >= Rational(0), "prune: rho must be >= 0");
    require(cfg.epsilon > Rational(0) && cfg.epsilon < Rational(1),
            "prune: need 0 < epsilon < 1");
    require(cfg.eta > 0 && cfg.eta < 1, "prune: need 0 < eta < 1");
    if (cfg.iterations) require(*cfg.iterations >= 1, "prune: need iterations >= 1");
    check_shape(space, S);
    if (space.empty) return {};

    const u32 r = (u32)space.basis.size();
    if (r == 0) {
        // degenerate: single member, no randomness
        if (dist_sets(encode(space.offset), S) <= rho) return {space.offset};
        return {};
    }

    const Codeword off_cw = encode(space.offset);
    const auto basis_cw = encode_family(space.basis, encode);
    const u32 n = S.n, s = S.s;
    const u64 iters =
        cfg.iterations ? *cfg.iterations
                       : prune_iterations(cfg.epsilon.to_double(), r, S.ell(), cfg.eta);

    std::set<std::vector<u32>> found;  // canonical trimmed coefficient vectors
    std::vector<u32> coords(r);
    std::vector<u32> pick(r);
    for (u64 it = 0; it < iters; ++it) {
        Rng rng(Rng::derive(cfg.seed, it));
        for (u32 j = 0; j < r; ++j) coords[j] = (u32)rng.below(n);

        // walk every choice of one candidate per picked coordinate
        std::fill(pick.begin(), pick.end(), 0);
        for (;;) {
            Matrix A(r * s, r);
            std::vector<u32> rhs((size_t)r * s);
            for (u32 j = 0; j < r; ++j) {
                const u32 i = coords[j];
                const auto& cand = S.sets[i][pick[j]];
                for (u32 row = 0; row < s; ++row) {
                    for (u32 t = 0; t < r; ++t) A.at(j * s + row, t) = basis_cw[t].at(i, row);
                    rhs[(size_t)j * s + row] = F.sub(cand[row], off_cw.at(i, row));
                }
            }
            auto sol = solve_affine(F, std::move(A), rhs);
            if (sol && sol->kernel.empty()) {
                Poly member = space_member(F, space, sol->particular);
                found.insert(member.c);
            }
            // odometer over candidate indices
            u32 j = 0;
            for (; j < r; ++j) {
                if (++pick[j] < S.sets[coords[j]].size()) break;
                pick[j] = 0;
            }
            if (j == r) break;
        }
    }

    std::vector<Poly> out;
    for (const auto& coeffs : found) {
        Poly f(coeffs);
        if (dist_sets(encode(f), S) <= rho) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Poly> enumerate_list(const Field& F, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget,
                                 const EncodeFn& encode) {
    require(rho >= Rational(0), "enumerate: rho must be >= 0");
    check_shape(space, S);
    if (space.empty) return {};

    const u32 r = (u32)space.basis.size();
    u128 total = 1;
    for (u32 t = 0; t < r; ++t) {
        total *= F.p;
        if (total > budget)
            throw BudgetError("enumerate: q^r exceeds budget, use prune instead");
    }
    if (r == 0) {
        if (dist_sets(encode(space.offset), S) <= rho) return {space.offset};
        return {};
    }

    const Codeword off_cw = encode(space.offset);
    const auto basis_cw = encode_family(space.basis, encode);
    const u32 n = S.n, s = S.s;

    // Agreement counting: for each column and candidate, the coordinates
    // lambda with member column == candidate form an affine subspace of
    // F_q^r; distinct candidates hit disjoint lambda sets, so incrementing a
    // per-lambda counter is exact.
    std::vector<u32> counts((size_t)total, 0);
    std::vector<u64> qpow(r);
    qpow[0] = 1;
    for (u32 t = 1; t < r; ++t) qpow[t] = qpow[t - 1] * F.p;

    std::vector<u32> lam(r);
    for (u32 i = 0; i < n; ++i) {
        for (const auto& cand : S.sets[i]) {
            Matrix A(s, r);
            std::vector<u32> rhs(s);
            for (u32 row = 0; row < s; ++row) {
                for (u32 t = 0; t < r; ++t) A.at(row, t) = basis_cw[t].at(i, row);
                rhs[row] = F.sub(cand[row], off_cw.at(i, row));
            }
            auto sol = solve_affine(F, std::move(A), rhs);
            if (!sol) continue;
            const u32 k = (u32)sol->kernel.size();
            std::vector<u32> mu(k, 0);
            for (;;) {
                u64 idx = 0;
                for (u32 t = 0; t < r; ++t) {
                    u32 v = sol->particular[t];
                    for (u32 e = 0; e < k; ++e)
                        v = F.add(v, F.mul(mu[e], sol->kernel[e][t]));
                    lam[t] = v;
                    idx += qpow[t] * v;
                }
                ++counts[idx];
                u32 e = 0;
                for (; e < k; ++e) {
                    if (++mu[e] < F.p) break;
                    mu[e] = 0;
                }
                if (e == k) break;
            }
        }
    }

    // misses <= rho * n, decided exactly in rationals
    std::vector<Poly> out;
    for (u64 idx = 0; idx < (u64)total; ++idx) {
        const u32 misses = n - counts[idx];
        if ((i128)misses * rho.den > (i128)rho.num * n) continue;
        u64 rest = idx;
        for (u32 t = 0; t < r; ++t) {
            lam[t] = (u32)(rest % F.p);
            rest /= F.p;
        }
        out.push_back(space_member(F, space, lam));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Poly> prune(const FrsParams& P, const CandidateSpace& space, const RecoverySets& S,
                        Rational rho, const PruneConfig& cfg) {
    return prune(P.field, space, S, rho, cfg, [&](const Poly& f) { return encode_frs(P, f); });
}

std::vector<Poly> enumerate_list(const FrsParams& P, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget) {
    return enumerate_list(P.field, space, S, rho, budget,
                          [&](const Poly& f) { return encode_frs(P, f); });
}

std::vector<Poly> enumerate_list(const MultParams& P, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget) {
    return enumerate_list(P.field, space, S, rho, budget,
                          [&](const Poly& f) { return encode_mult(P, f); });
}

}  // namespace listdec
