#include "listdec/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "listdec/bounds.hpp"
#include "listdec/decoder.hpp"

namespace listdec {

namespace {

constexpr u64 kEnumBudget = (u64)1 << 22;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool list_contains(const std::vector<Poly>& list, const Poly& f) {
    return std::find(list.begin(), list.end(), f) != list.end();
}

std::vector<Codeword> direction_codewords(const FrsParams& P, const CandidateSpace& space) {
    std::vector<Codeword> out;
    out.reserve(space.basis.size());
    for (const auto& b : space.basis) out.push_back(encode_frs(P, b));
    return out;
}

}  // namespace

FrsParams tiny_frs() { return FrsParams(Field(13), 3, 4, 3); }
FrsParams singleton2_frs() { return FrsParams(Field(211), 5, 40, 49); }
FrsParams medium_frs() { return FrsParams(Field(409), 8, 51, 101); }
MultParams medium_mult() { return MultParams(Field(409), 8, 51, 101); }

ConfusablePair plant_confusable_pair(const FrsParams& P, u32 m, Rng& rng) {
    const Field& F = P.field;
    const auto rt = radius_threshold(P, m, 1);
    const u32 t_min = rt.t_min;
    require(t_min <= P.n, "confusable pair: no positive decoding radius");
    const u32 g_min = 2 * t_min > P.n ? 2 * t_min - P.n : 1;
    require((u64)g_min * P.s <= P.d, "confusable pair: radius leaves no room for two codewords");

    // h vanishes on g_min whole columns, so f and f + h agree there.
    std::vector<u32> cols(P.n);
    std::iota(cols.begin(), cols.end(), 0);
    for (u32 t = 0; t < g_min; ++t)
        std::swap(cols[t], cols[t + (u32)rng.below(P.n - t)]);
    Poly h{{1}};
    for (u32 t = 0; t < g_min; ++t)
        for (u32 j = 0; j < P.s; ++j)
            h = poly_mul(F, h, Poly{{F.neg(P.point(cols[t] * P.s + j)), 1}});
    Poly r;
    while (r.is_zero()) r = random_poly(F, rng, P.d - g_min * P.s);
    h = poly_mul(F, h, r);

    ConfusablePair out;
    out.f = random_poly(F, rng, P.d);
    out.g = poly_add(F, out.f, h);
    const Codeword cf = encode_frs(P, out.f);
    const Codeword cg = encode_frs(P, out.g);

    std::vector<u32> shared_cols, other_cols;
    for (u32 i = 0; i < P.n; ++i) {
        auto a = cf.column(i), b = cg.column(i);
        (std::equal(a.begin(), a.end(), b.begin()) ? shared_cols : other_cols).push_back(i);
    }
    out.shared = (u32)shared_cols.size();

    // Split the disagreeing columns so both codewords reach t_min agreements.
    for (u32 t = 0; t + 1 < other_cols.size(); ++t)
        std::swap(other_cols[t], other_cols[t + (u32)rng.below(other_cols.size() - t)]);
    const u32 need = t_min > out.shared ? t_min - out.shared : 0;
    out.y = cf;
    for (u32 t = 0; t < need; ++t) {
        const u32 i = other_cols[t];
        std::copy(cg.column(i).begin(), cg.column(i).end(),
                  out.y.a.begin() + (size_t)i * P.s);
    }
    out.errors_f = (u32)((dist_words(out.y, cf) * Rational(P.n)).floor());
    out.errors_g = (u32)((dist_words(out.y, cg) * Rational(P.n)).floor());
    ensure(P.n - out.errors_f >= t_min && P.n - out.errors_g >= t_min,
           "confusable pair: agreement budget broken");
    return out;
}

Singleton2Report run_singleton2(u32 trials, u64 seed, std::optional<u32> errors_override,
                                u64 budget) {
    require(trials >= 1, "singleton2: need trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const FrsParams P = singleton2_frs();
    const Field& F = P.field;
    const u32 m = 2;
    const auto rt = radius_threshold(P, m, 1);
    const Rational rho = frs_radius(m, P.s, P.rate());  // 11/24 at these parameters

    Singleton2Report rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.errors = errors_override.value_or((u32)(rho * Rational(P.n)).floor());
    rep.rho = rho;
    rep.guaranteed = (i64)rep.errors <= rt.max_errors;

    for (u32 trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive(seed, trial));
        const Poly msg = random_poly(F, rng, P.d);
        const Codeword y = corrupt(F, encode_frs(P, msg), rep.errors, rng);
        const CandidateSpace space = frs_list_decode(P, y, m);
        const auto list = enumerate_list(P, space, RecoverySets::singletons(y), rho, budget);
        const bool found = list_contains(list, msg);
        rep.max_list = std::max(rep.max_list, (u32)list.size());
        ++rep.list_hist[(u32)list.size()];
        if (rep.guaranteed) {
            ensure(space_contains(F, space, msg), "singleton2: planted message left the space");
            ensure(found, "singleton2: planted codeword missing from the list");
            ensure(list.size() <= 2, "singleton2: list size exceeded 2 at the radius");
        } else {
            if (!found) ++rep.missing_planted;
            if (list.size() > 2) ++rep.oversize_lists;
        }
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

namespace {

template <typename Params, typename EncodeF, typename DecodeF>
ContainmentReport containment_core(const char* code, const Params& P, u32 m, u32 errors,
                                   u32 trials, u64 seed, EncodeF encode, DecodeF decode) {
    require(trials >= 1, "containment: need trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    ContainmentReport rep;
    rep.code = code;
    rep.m = m;
    rep.trials = trials;
    rep.errors = errors;
    rep.seed = seed;
    for (u32 trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive(seed, trial));
        const Poly msg = random_poly(P.field, rng, P.d);
        const Codeword y = corrupt(P.field, encode(msg), errors, rng);
        const CandidateSpace space = decode(y);
        ensure(space_contains(P.field, space, msg), "containment: planted message not in space");
        ensure(space.dim() >= 0 && space.dim() <= (int)m - 1,
               "containment: dimension above m-1");
        rep.max_dim = std::max(rep.max_dim, (u32)space.dim());
        ++rep.dim_hist[space.dim()];
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

}  // namespace

ContainmentReport run_containment_frs(u32 m, u32 errors, u32 trials, u64 seed) {
    const FrsParams P = medium_frs();
    const auto rt = radius_threshold(P, m, 1);
    require((i64)errors <= rt.max_errors, "containment: errors beyond the guarantee");
    return containment_core(
        "frs", P, m, errors, trials, seed, [&](const Poly& f) { return encode_frs(P, f); },
        [&](const Codeword& y) { return frs_list_decode(P, y, m); });
}

ContainmentReport run_containment_mult(u32 m, u32 errors, u32 trials, u64 seed) {
    const MultParams P = medium_mult();
    const auto rt = radius_threshold(P, m);
    require((i64)errors <= rt.max_errors, "containment: errors beyond the guarantee");
    return containment_core(
        "mult", P, m, errors, trials, seed, [&](const Poly& f) { return encode_mult(P, f); },
        [&](const Codeword& y) { return mult_list_decode(P, y, m); });
}

ListsizeReport run_listsize(u32 m, u32 trials, u64 seed, u64 budget) {
    require(trials >= 1, "listsize: need trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const FrsParams P = medium_frs();
    const Field& F = P.field;
    require(m >= 2 && m <= P.s, "listsize: need 2 <= m <= s");

    const Rational rho = frs_radius(m, P.s, P.rate());
    const auto rt = radius_threshold(P, m, 1);
    const u32 e = (u32)(rho * Rational(P.n)).floor();
    ensure((i64)e <= rt.max_errors, "listsize: radius quantization mismatch");
    const Rational bound = m >= 3 ? fixed_m_bound(m, P.s, P.rate()).L : m2_bound(P.s, P.rate());

    ListsizeReport rep;
    rep.m = m;
    rep.trials = trials;
    rep.errors = e;
    rep.seed = seed;
    rep.rho = rho;
    rep.bound = bound;
    // Alternate plain random errors with two-codeword words: the latter are
    // the words where lists larger than one actually occur.
    for (u32 trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive(seed, trial));
        Codeword y;
        Poly msg;
        std::optional<Poly> second;
        if (trial % 2 == 0) {
            msg = random_poly(F, rng, P.d);
            y = corrupt(F, encode_frs(P, msg), e, rng);
        } else {
            auto pair = plant_confusable_pair(P, m, rng);
            msg = pair.f;
            second = pair.g;
            y = pair.y;
        }
        const CandidateSpace space = frs_list_decode(P, y, m);
        ensure(space_contains(F, space, msg), "listsize: planted message not in space");
        const auto list = enumerate_list(P, space, RecoverySets::singletons(y), rho, budget);
        ensure(list_contains(list, msg), "listsize: planted codeword missing from the list");
        if (second)
            ensure(list_contains(list, *second), "listsize: second codeword missing");
        ensure(Rational((i64)list.size()) <= bound, "listsize: enumerated list beat the bound");
        rep.max_list = std::max(rep.max_list, (u32)list.size());
        ++rep.list_hist[(u32)list.size()];
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

PruneReport run_prune_exp(u32 trials, u64 seed, double eta, Rational epsilon) {
    require(trials >= 1, "prune exp: need trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const FrsParams P = tiny_frs();
    const Field& F = P.field;
    const u32 m = 2;
    const Rational rho(1, 4);
    const u32 e = 1;  // the full guaranteed radius on the tiny instance

    PruneReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.eta = eta;
    rep.epsilon = epsilon;
    for (u32 trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive(seed, 2 * trial));
        const Poly msg = random_poly(F, rng, P.d);
        const Codeword y = corrupt(F, encode_frs(P, msg), e, rng);
        const CandidateSpace space = frs_list_decode(P, y, m);
        ensure(space_contains(F, space, msg), "prune exp: planted message not in space");
        const auto sets = RecoverySets::singletons(y);
        const auto truth = enumerate_list(P, space, sets, rho, kEnumBudget);
        PruneConfig cfg;
        cfg.epsilon = epsilon;
        cfg.eta = eta;
        cfg.seed = Rng::derive(seed, 2 * trial + 1);
        const auto pruned = prune(P, space, sets, rho, cfg);
        for (const auto& f : pruned)
            ensure(list_contains(truth, f), "prune exp: prune output outside the exact list");
        rep.total_codewords += truth.size();
        for (const auto& f : truth)
            if (!list_contains(pruned, f)) ++rep.missed;
    }
    rep.miss_rate =
        rep.total_codewords == 0 ? 0.0 : (double)rep.missed / (double)rep.total_codewords;
    ensure(rep.miss_rate <= 2 * eta, "prune exp: miss rate exceeded 2*eta");
    rep.seconds = seconds_since(t0);
    return rep;
}

SubspaceReport run_subspace_exp(u32 instances, u64 seed) {
    require(instances >= 1, "subspace exp: need instances >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const FrsParams P = medium_frs();
    const Field& F = P.field;
    const Rational delta = P.distance_bound();

    SubspaceReport rep;
    rep.instances = instances;
    rep.seed = seed;
    rep.min_bound = 1e300;

    // Plain random errors give zero-dimensional spaces almost surely, so the
    // direction spaces come from words confusable between two codewords.
    u32 used = 0, attempt = 0;
    const u32 max_attempts = instances * 10;
    while (used < instances && attempt < max_attempts) {
        Rng rng(Rng::derive(seed, attempt));
        ++attempt;
        const auto pair = plant_confusable_pair(P, 3, rng);
        const CandidateSpace space = frs_list_decode(P, pair.y, 3);
        ensure(space_contains(F, space, pair.f) && space_contains(F, space, pair.g),
               "subspace exp: planted pair not in space");
        const u32 r = (u32)space.basis.size();
        if (r < 1 || r >= P.s) continue;
        ++used;
        ++rep.r_hist[r];

        const auto dirs = direction_codewords(P, space);
        const auto stats = column_kernel_dims(F, dirs, delta);
        if (!rep.has_sample) {
            rep.has_sample = true;
            rep.sample_stats = stats;
        }
        if (!stats.within_bound) ++rep.violations;
        rep.max_mean = std::max(rep.max_mean, stats.mean.to_double());
        rep.min_bound = std::min(rep.min_bound, stats.bound.to_double());
        rep.r0_direction_max = std::max(rep.r0_direction_max, stats.r0);

        // Same statistic on the span including the offset, reported alongside.
        auto span = dirs;
        span.insert(span.begin(), encode_frs(P, space.offset));
        auto indep = independent_subset(F, span);
        if (!indep.empty() && indep.size() < P.s) {
            const auto affine_stats = column_kernel_dims(F, indep, delta);
            rep.r0_affine_max = std::max(rep.r0_affine_max, affine_stats.r0);
        }

        const u32 agreement = P.n - pair.errors_f;
        if (Rational(agreement) > (Rational(1) - delta) * Rational(P.n) && agreement > stats.r0)
            rep.fine_bound_max =
                std::max(rep.fine_bound_max, apply_fine_bound(stats, agreement, 1).to_double());
    }
    ensure(used == instances, "subspace exp: not enough nontrivial direction spaces");
    ensure(rep.violations == 0, "subspace exp: expectation bound violated");
    rep.attempts = attempt;

    // eps/4 fraction check: U is a dim-1 direction space from an m=2 decode
    // of a confusable word; A is the agreement set of a planted codeword at
    // floor((delta - eps) n) errors, which meets the |A| precondition.
    // eps = 1/2 satisfies dim(U)/s = 1/8 <= eps/4.
    const Rational eps(1, 2);
    const u32 e2 = (u32)(((delta - eps) * Rational(P.n)).floor());
    for (u32 trial = 0; trial < instances; ++trial) {
        Rng rng(Rng::derive(seed ^ 0x5b5b5b5bULL, trial));
        const auto pair = plant_confusable_pair(P, 2, rng);
        const CandidateSpace space = frs_list_decode(P, pair.y, 2);
        if (space.dim() != 1) continue;
        const Poly msg = random_poly(F, rng, P.d);
        const Codeword cw = encode_frs(P, msg);
        const Codeword y = corrupt(F, cw, e2, rng);
        std::vector<u32> agreement;
        for (u32 i = 0; i < P.n; ++i) {
            auto a = cw.column(i), b = y.column(i);
            if (std::equal(a.begin(), a.end(), b.begin())) agreement.push_back(i);
        }
        iterative_fraction_check(F, direction_codewords(P, space), agreement, eps, delta);
        ++rep.iterative_checked;
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

}  // namespace listdec
