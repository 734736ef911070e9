#include "listdec/oracle.hpp"

namespace listdec {

namespace {

std::vector<Poly> brute_force_core(const Field& F, u32 d, const RecoverySets& S, Rational rho,
                                   OracleBudget budget, const EncodeFn& encode) {
    u128 total = 1;
    for (u32 t = 0; t <= d; ++t) {
        total *= F.p;
        if (total > budget.max_messages)
            throw BudgetError("oracle: q^(d+1) messages exceed the budget");
    }
    std::vector<u32> coeffs(d + 1, 0);
    std::vector<Poly> out;
    for (;;) {
        Poly f{std::vector<u32>(coeffs)};
        if (dist_sets(encode(f), S) <= rho) out.push_back(std::move(f));
        // odometer with the last coefficient fastest keeps the output in
        // ascending lexicographic order
        u32 j = d + 1;
        while (j-- > 0) {
            if (++coeffs[j] < F.p) break;
            coeffs[j] = 0;
            if (j == 0) return out;
        }
    }
}

}  // namespace

std::vector<Poly> brute_force_list(const FrsParams& P, const RecoverySets& S, Rational rho,
                                   OracleBudget budget) {
    require(S.n == P.n && S.s == P.s, "oracle: set shape mismatch");
    return brute_force_core(P.field, P.d, S, rho, budget,
                            [&](const Poly& f) { return encode_frs(P, f); });
}

std::vector<Poly> brute_force_list(const MultParams& P, const RecoverySets& S, Rational rho,
                                   OracleBudget budget) {
    require(S.n == P.n && S.s == P.s, "oracle: set shape mismatch");
    return brute_force_core(P.field, P.d, S, rho, budget,
                            [&](const Poly& f) { return encode_mult(P, f); });
}

u32 max_list_size_sweep(const FrsParams& P, Rational rho, u32 trials, u32 patterns, Rng& rng,
                        OracleBudget budget) {
    require(trials >= 1 && patterns >= 1, "sweep: need trials >= 1 and patterns >= 1");
    const u32 e = (u32)(rho * Rational(P.n)).floor();
    u32 best = 0;
    for (u32 t = 0; t < trials; ++t) {
        Poly msg = random_poly(P.field, rng, P.d);
        Codeword cw = encode_frs(P, msg);
        for (u32 pat = 0; pat < patterns; ++pat) {
            Codeword y = corrupt(P.field, cw, e, rng);
            auto list = brute_force_list(P, RecoverySets::singletons(y), rho, budget);
            best = std::max(best, (u32)list.size());
        }
    }
    return best;
}

}  // namespace listdec
