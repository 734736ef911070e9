#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "listdec/experiments.hpp"
#include "listdec/oracle.hpp"

using namespace listdec;

namespace {

bool contains(const std::vector<Poly>& list, const Poly& f) {
    return std::find(list.begin(), list.end(), f) != list.end();
}

bool subset(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return std::all_of(a.begin(), a.end(), [&](const Poly& f) { return contains(b, f); });
}

}  // namespace

TEST_CASE("prune degenerate cases") {
    FrsParams P = tiny_frs();
    Poly f{{2, 0, 1}};
    Codeword y = encode_frs(P, f);
    auto S = RecoverySets::singletons(y);

    CandidateSpace dim0;
    dim0.offset = f;
    dim0.m = 2;
    PruneConfig cfg;
    cfg.epsilon = Rational(1, 12);
    cfg.seed = 3;
    // offset within radius: the single member comes back, no randomness
    auto out = prune(P, dim0, S, Rational(0), cfg);
    CHECK(out == std::vector<Poly>{f});

    // sets disjoint from every member beyond the radius
    Codeword far = y;
    for (auto& v : far.a) v = (v + 1) % 13;
    auto Sfar = RecoverySets::singletons(far);
    CHECK(prune(P, dim0, Sfar, Rational(0), cfg).empty());

    CandidateSpace empty_space;
    empty_space.empty = true;
    CHECK(prune(P, empty_space, S, Rational(1, 4), cfg).empty());

    CHECK_THROWS_AS(prune(P, dim0, S, Rational(1), cfg), ParamError);  // rho >= 1
    PruneConfig bad = cfg;
    bad.epsilon = Rational(2);
    CHECK_THROWS_AS(prune(P, dim0, S, Rational(1, 4), bad), ParamError);
}

TEST_CASE("prune equals exhaustive enumeration on the tiny instance") {
    FrsParams P = tiny_frs();
    const Rational rho(1, 4);
    Rng rng(606);
    for (u32 trial = 0; trial < 30; ++trial) {
        Poly f = random_poly(P.field, rng, P.d);
        Codeword y = corrupt(P.field, encode_frs(P, f), 1, rng);
        auto S = RecoverySets::singletons(y);
        CandidateSpace sp = frs_list_decode(P, y, 2);
        auto truth = enumerate_list(P, sp, S, rho, 1 << 20);
        PruneConfig cfg;
        cfg.epsilon = Rational(1, 12);
        cfg.eta = 0.01;
        cfg.seed = Rng::derive(606, trial);
        auto pruned = prune(P, sp, S, rho, cfg);
        CHECK(pruned == truth);
        // soundness: every output is within the radius
        for (const auto& g : pruned)
            CHECK(dist_sets(encode_frs(P, g), S) <= rho);
        // determinism: same seed, same list
        CHECK(prune(P, sp, S, rho, cfg) == pruned);
    }
}

TEST_CASE("prune respects an explicit iteration override") {
    FrsParams P = tiny_frs();
    Rng rng(9001);
    Poly f = random_poly(P.field, rng, P.d);
    Codeword y = corrupt(P.field, encode_frs(P, f), 1, rng);
    auto S = RecoverySets::singletons(y);
    CandidateSpace sp = frs_list_decode(P, y, 2);
    PruneConfig cfg;
    cfg.epsilon = Rational(1, 2);
    cfg.iterations = 200;
    cfg.seed = 5;
    auto a = prune(P, sp, S, Rational(1, 4), cfg);
    auto truth = enumerate_list(P, sp, S, Rational(1, 4), 1 << 20);
    CHECK(subset(a, truth));
}

TEST_CASE("enumerate_list basics") {
    FrsParams P = tiny_frs();
    Poly f{{1, 2, 3}};
    Codeword y = encode_frs(P, f);
    auto S = RecoverySets::singletons(y);

    CandidateSpace dim0;
    dim0.offset = f;
    CHECK(enumerate_list(P, dim0, S, Rational(0), 1 << 20) == std::vector<Poly>{f});

    CandidateSpace sp = frs_list_decode(P, y, 2);
    // rho = 1 keeps all q^r members
    auto all = enumerate_list(P, sp, S, Rational(1), 1 << 20);
    CHECK(all.size() == (size_t)(sp.dim() == 0 ? 1 : 13));
    CHECK(std::is_sorted(all.begin(), all.end(), lex_less));

    if (sp.dim() == 1) CHECK_THROWS_AS(enumerate_list(P, sp, S, Rational(1), 5), BudgetError);
}

TEST_CASE("prune output is always a subset of enumerate_list") {
    FrsParams P = tiny_frs();
    Rng rng(17);
    for (int t = 0; t < 15; ++t) {
        Codeword y(P.n, P.s);
        for (auto& v : y.a) v = (u32)rng.below(13);  // arbitrary received word
        auto S = RecoverySets::singletons(y);
        CandidateSpace sp = frs_list_decode(P, y, 2);
        auto truth = enumerate_list(P, sp, S, Rational(1, 4), 1 << 20);
        PruneConfig cfg;
        cfg.epsilon = Rational(1, 12);
        cfg.seed = Rng::derive(17, t);
        auto pruned = prune(P, sp, S, Rational(1, 4), cfg);
        CHECK(subset(pruned, truth));
        CHECK(pruned == truth);
    }
}

TEST_CASE("brute force oracle") {
    FrsParams P = tiny_frs();
    Poly f{{3, 1}};
    Codeword y = encode_frs(P, f);
    auto S = RecoverySets::singletons(y);

    // rho = 0 with the exact codeword: only f itself
    auto list = brute_force_list(P, S, Rational(0));
    CHECK(list == std::vector<Poly>{f});

    // rho = 1: every message qualifies
    CHECK(brute_force_list(P, S, Rational(1)).size() == 13 * 13 * 13 * 13);

    // budget refusal
    CHECK_THROWS_AS(brute_force_list(P, S, Rational(1), OracleBudget{100}), BudgetError);

    // monotone in rho
    Rng rng(88);
    for (int t = 0; t < 5; ++t) {
        Codeword w(P.n, P.s);
        for (auto& v : w.a) v = (u32)rng.below(13);
        auto Sw = RecoverySets::singletons(w);
        auto l1 = brute_force_list(P, Sw, Rational(1, 4));
        auto l2 = brute_force_list(P, Sw, Rational(1, 2));
        CHECK(subset(l1, l2));
    }
}

TEST_CASE("brute force agrees with the decoder-space enumeration") {
    FrsParams P = tiny_frs();
    Rng rng(1001);
    for (int t = 0; t < 10; ++t) {
        Codeword y(P.n, P.s);
        for (auto& v : y.a) v = (u32)rng.below(13);
        auto S = RecoverySets::singletons(y);
        auto truth = brute_force_list(P, S, Rational(1, 4));
        CandidateSpace sp = frs_list_decode(P, y, 2);
        auto enumerated = enumerate_list(P, sp, S, Rational(1, 4), 1 << 20);
        CHECK(truth == enumerated);
    }
}

TEST_CASE("max list size sweep") {
    FrsParams P = tiny_frs();
    Rng rng(555);
    // inside the unique decoding region every list has one element
    CHECK(max_list_size_sweep(P, Rational(1, 4), 10, 2, rng) == 1);
    CHECK(max_list_size_sweep(P, Rational(0), 5, 1, rng) == 1);
    // at the m=2 radius (1/3 here) the list size stays at most 2
    Rng rng2(556);
    CHECK(max_list_size_sweep(P, Rational(1, 3), 20, 3, rng2) <= 2);
}
