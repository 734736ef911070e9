#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "listdec/bounds.hpp"
#include "listdec/decoder.hpp"
#include "listdec/experiments.hpp"
#include "listdec/oracle.hpp"

using namespace listdec;

TEST_CASE("radius thresholds on the pinned configurations") {
    // tiny: N=8, D=1, guarantee covers one bad column
    auto rt = radius_threshold(tiny_frs(), 2, 1);
    CHECK(rt.D == 1);
    CHECK(rt.t_min == 3);
    CHECK(rt.max_errors == 1);

    // q=211, s=5, n=40, d=49, m=2: N=160, D=37, 18 errors
    rt = radius_threshold(singleton2_frs(), 2, 1);
    CHECK(rt.D == 37);
    CHECK(rt.t_min == 22);
    CHECK(rt.max_errors == 18);

    // q=409, s=8, n=51, d=101, m=3: N=306, D=51, 25 errors
    rt = radius_threshold(medium_frs(), 3, 1);
    CHECK(rt.D == 51);
    CHECK(rt.t_min == 26);
    CHECK(rt.max_errors == 25);

    // m=1 reduces to unique decoding at (1-R)/2 up to floors
    rt = radius_threshold(singleton2_frs(), 1, 1);
    i64 unique = ((Rational(1) - Rational(1, 4)) / Rational(2) * Rational(40)).floor();
    CHECK(rt.max_errors == unique);

    // s = m boundary: one window per column
    FrsParams P(Field(13), 3, 4, 3);
    rt = radius_threshold(P, 3, 2);
    CHECK(rt.D + 1 == ((u64)4 * 2 * 1 + 1 - 3 + 3) / 4);

    CHECK_THROWS_AS(radius_threshold(tiny_frs(), 4, 1), ParamError);
    CHECK_THROWS_AS(radius_threshold(tiny_frs(), 0, 1), ParamError);
}

TEST_CASE("zero-error containment") {
    FrsParams P = tiny_frs();
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = encode_frs(P, f);
        for (u32 m = 1; m <= P.s; ++m) {
            CandidateSpace sp = frs_list_decode(P, y, m);
            CHECK(space_contains(P.field, sp, f));
            CHECK(sp.dim() <= (int)m - 1);
        }
    }
    MultParams M(Field(13), 3, 4, 3);
    for (int t = 0; t < 20; ++t) {
        Poly f = random_poly(M.field, rng, M.d);
        Codeword y = encode_mult(M, f);
        for (u32 m = 1; m <= M.s; ++m) {
            CandidateSpace sp = mult_list_decode(M, y, m);
            CHECK(space_contains(M.field, sp, f));
            CHECK(sp.dim() <= (int)m - 1);
        }
    }
}

TEST_CASE("tiny instance: full brute-force list is inside the space") {
    FrsParams P = tiny_frs();
    Rng rng(4242);
    for (int t = 0; t < 25; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = corrupt(P.field, encode_frs(P, f), 1, rng);
        CandidateSpace sp = frs_list_decode(P, y, 2);
        CHECK(sp.dim() <= 1);
        CHECK(space_contains(P.field, sp, f));
        auto list = brute_force_list(P, RecoverySets::singletons(y), Rational(1, 4));
        for (const auto& g : list) CHECK(space_contains(P.field, sp, g));
    }
}

TEST_CASE("planted recovery at the guaranteed radius, frs m=2 and m=3") {
    FrsParams P2 = singleton2_frs();
    Rng rng(555);
    for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(P2.field, rng, P2.d);
        Codeword y = corrupt(P2.field, encode_frs(P2, f), 18, rng);
        CandidateSpace sp = frs_list_decode(P2, y, 2);
        CHECK(sp.dim() <= 1);
        CHECK(space_contains(P2.field, sp, f));
    }
    FrsParams P3 = medium_frs();
    for (int t = 0; t < 5; ++t) {
        Poly f = random_poly(P3.field, rng, P3.d);
        Codeword y = corrupt(P3.field, encode_frs(P3, f), 25, rng);
        CandidateSpace sp = frs_list_decode(P3, y, 3);
        CHECK(sp.dim() <= 2);
        CHECK(space_contains(P3.field, sp, f));
    }
}

TEST_CASE("planted recovery for mult, m=3 and unique decoding m=1") {
    MultParams P = medium_mult();
    Rng rng(777);
    for (int t = 0; t < 5; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = corrupt(P.field, encode_mult(P, f), 25, rng);
        CandidateSpace sp = mult_list_decode(P, y, 3);
        CHECK(sp.dim() <= 2);
        CHECK(space_contains(P.field, sp, f));
    }
    // e = floor(n(1-R)/2) - 1 errors decode uniquely with m=1
    const u32 e = (u32)(((Rational(1) - P.rate()) / Rational(2) * Rational(P.n)).floor()) - 1;
    for (int t = 0; t < 3; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = corrupt(P.field, encode_mult(P, f), e, rng);
        CandidateSpace sp = mult_list_decode(P, y, 1);
        CHECK(sp.dim() == 0);
        CHECK(sp.offset == f);
    }
}

TEST_CASE("list recovery with ell = 2 contains every planted codeword") {
    FrsParams P = tiny_frs();
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Poly g = random_poly(P.field, rng, P.d);
        Codeword cf = encode_frs(P, f), cg = encode_frs(P, g);
        std::vector<std::vector<std::vector<u32>>> sets(P.n);
        for (u32 i = 0; i < P.n; ++i) {
            auto a = cf.column(i), b = cg.column(i);
            sets[i].push_back({a.begin(), a.end()});
            std::vector<u32> bb(b.begin(), b.end());
            if (bb != sets[i][0]) sets[i].push_back(bb);
        }
        RecoverySets S(P.s, std::move(sets));
        CandidateSpace sp = frs_list_recover(P, S, 2);
        CHECK(sp.dim() <= 1);
        CHECK(space_contains(P.field, sp, f));
        CHECK(space_contains(P.field, sp, g));
    }
}

TEST_CASE("confusable pairs force a nontrivial space containing both codewords") {
    FrsParams P = singleton2_frs();
    Rng rng(2718);
    for (int t = 0; t < 10; ++t) {
        auto pair = plant_confusable_pair(P, 2, rng);
        CHECK(pair.shared >= 4);  // 2*t_min - n at these parameters
        CHECK(pair.errors_f <= 18);
        CHECK(pair.errors_g <= 18);
        CandidateSpace sp = frs_list_decode(P, pair.y, 2);
        CHECK(sp.dim() == 1);
        CHECK(space_contains(P.field, sp, pair.f));
        CHECK(space_contains(P.field, sp, pair.g));
        // both codewords are within the radius, and nothing else joins them
        auto list = enumerate_list(P, sp, RecoverySets::singletons(pair.y), Rational(11, 24),
                                   1 << 20);
        CHECK(list.size() == 2);
        CHECK(std::find(list.begin(), list.end(), pair.f) != list.end());
        CHECK(std::find(list.begin(), list.end(), pair.g) != list.end());
    }
}

TEST_CASE("frs m=1 is unique decoding below half the distance") {
    FrsParams P = singleton2_frs();
    const u32 e = (u32)(((Rational(1) - P.rate()) / Rational(2) * Rational(P.n)).floor()) - 1;
    Rng rng(64);
    for (int t = 0; t < 5; ++t) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = corrupt(P.field, encode_frs(P, f), e, rng);
        CandidateSpace sp = frs_list_decode(P, y, 1);
        CHECK(sp.dim() == 0);
        CHECK(sp.offset == f);
    }
}

TEST_CASE("the candidate set is closed under affine combinations") {
    FrsParams P = singleton2_frs();
    Rng rng(909);
    auto pair = plant_confusable_pair(P, 2, rng);
    CandidateSpace sp = frs_list_decode(P, pair.y, 2);
    REQUIRE(sp.dim() >= 1);
    const Field& F = P.field;
    for (int t = 0; t < 20; ++t) {
        std::vector<u32> l1(sp.basis.size()), l2(sp.basis.size());
        for (auto& v : l1) v = (u32)rng.below(F.p);
        for (auto& v : l2) v = (u32)rng.below(F.p);
        Poly a = space_member(F, sp, l1), b = space_member(F, sp, l2);
        u32 lam = (u32)rng.below(F.p);
        // lam*a + (1-lam)*b stays in the space
        Poly combo = poly_add(F, poly_scale(F, a, lam), poly_scale(F, b, F.sub(1, lam)));
        CHECK(space_contains(F, sp, combo));
    }
}

TEST_CASE("decoder parameter errors") {
    FrsParams P = tiny_frs();
    Codeword y = encode_frs(P, Poly{{1}});
    CHECK_THROWS_AS(frs_list_decode(P, y, 0), ParamError);
    CHECK_THROWS_AS(frs_list_decode(P, y, 4), ParamError);  // m > s
    // mult decoding requires q > d
    MultParams M(Field(13), 4, 4, 14);
    Codeword ym = encode_mult(M, Poly{{1}});
    CHECK_THROWS_AS(mult_list_decode(M, ym, 2), ParamError);
    // shape mismatches
    Codeword bad(3, 3);
    CHECK_THROWS_AS(frs_list_decode(P, bad, 2), ParamError);
}

TEST_CASE("decoding is deterministic") {
    FrsParams P = singleton2_frs();
    Rng rng(1212);
    Poly f = random_poly(P.field, rng, P.d);
    Codeword y = corrupt(P.field, encode_frs(P, f), 18, rng);
    CandidateSpace a = frs_list_decode(P, y, 2);
    CandidateSpace b = frs_list_decode(P, y, 2);
    CHECK(a.offset == b.offset);
    CHECK(a.basis == b.basis);
    CHECK(a.D == b.D);
}
