#pragma once

// Seeded desk experiments exercising the theorem-level guarantees on the
// pinned parameter sets.  Each runner returns a report struct and throws
// InvariantError the moment a guarantee that is a theorem fails (the CLI
// turns that into exit code 2).  The same runners back both the CLI
// subcommands and the acceptance suite.

#include <map>
#include <optional>

#include "listdec/analysis.hpp"
#include "listdec/oracle.hpp"

namespace listdec {

// Pinned desk configurations.
FrsParams tiny_frs();        // q=13,  s=3, n=4,  d=3   (oracle scale)
FrsParams singleton2_frs();  // q=211, s=5, n=40, d=49  (R=1/4, m=2 experiment)
FrsParams medium_frs();      // q=409, s=8, n=51, d=101 (R=1/4)
MultParams medium_mult();    // q=409, s=8, n=51, d=101, points alpha^i

// Two codewords and a received word within the decoding radius of both.
// The messages differ by a multiple of column annihilators, so their
// codewords share columns and the agreement budget covers both; decoding
// such a word must produce a space of dimension at least 1.
struct ConfusablePair {
    Poly f, g;
    Codeword y;
    u32 shared = 0;    // columns where the two codewords agree
    u32 errors_f = 0;  // columns where y differs from encode(f)
    u32 errors_g = 0;
};
ConfusablePair plant_confusable_pair(const FrsParams& P, u32 m, Rng& rng);

struct Singleton2Report {
    u32 trials = 0;
    u64 seed = 0;
    u32 errors = 0;
    Rational rho;           // enumeration radius (2/3)(1 - sR/(s-1))
    bool guaranteed = false;  // errors within the decoder guarantee
    u32 missing_planted = 0;  // only counted when !guaranteed
    u32 oversize_lists = 0;   // only counted when !guaranteed
    u32 max_list = 0;
    std::map<u32, u32> list_hist;
    double seconds = 0;
};
// Plant, corrupt, decode with m=2, enumerate the dim<=1 space; asserts the
// planted codeword is recovered and the list has at most 2 entries.
Singleton2Report run_singleton2(u32 trials, u64 seed, std::optional<u32> errors_override = {},
                                u64 budget = (u64)1 << 22);

struct ContainmentReport {
    std::string code;  // "frs" or "mult"
    u32 m = 0, trials = 0, errors = 0;
    u64 seed = 0;
    u32 max_dim = 0;
    std::map<int, u32> dim_hist;
    double seconds = 0;
};
// Planted message must lie in the candidate space and the dimension must stay
// below m for every trial.
ContainmentReport run_containment_frs(u32 m, u32 errors, u32 trials, u64 seed);
ContainmentReport run_containment_mult(u32 m, u32 errors, u32 trials, u64 seed);

struct ListsizeReport {
    u32 m = 0, trials = 0, errors = 0;
    u64 seed = 0;
    Rational rho;    // decoding radius for this m
    Rational bound;  // applicable fixed-m list bound
    u32 max_list = 0;
    std::map<u32, u32> list_hist;
    double seconds = 0;
};
// Enumerates the full list at the fixed-m radius on the medium configuration
// and asserts it never exceeds the evaluated bound.
ListsizeReport run_listsize(u32 m, u32 trials, u64 seed, u64 budget = (u64)1 << 22);

struct PruneReport {
    u32 trials = 0;
    u64 seed = 0;
    double eta = 0;
    Rational epsilon;
    u64 total_codewords = 0;
    u64 missed = 0;
    double miss_rate = 0;
    double seconds = 0;
};
// Tiny-instance prune vs exhaustive enumeration; asserts prune output is a
// subset of the exact list and the miss rate stays within 2*eta.
PruneReport run_prune_exp(u32 trials, u64 seed, double eta, Rational epsilon);

struct SubspaceReport {
    u32 instances = 0;
    u64 seed = 0;
    u32 attempts = 0;
    u32 violations = 0;  // expectation bound failures (must be zero)
    std::map<u32, u32> r_hist;
    double max_mean = 0;        // largest observed mean dim(V ∩ H_i)
    double min_bound = 0;       // smallest bound it was compared against
    u32 r0_direction_max = 0;   // r0 of the direction space
    u32 r0_affine_max = 0;      // r0 of span(offset, directions)
    double fine_bound_max = 0;  // largest fine bound applied to measured r0
    u32 iterative_checked = 0;  // dim-1 spaces run through the eps/4 check
    bool has_sample = false;
    SubspaceStats sample_stats;  // stats of the first instance, for the report
    double seconds = 0;
};
// Collects decoder-produced direction spaces with 1 <= r < s, checks the
// expectation bound mean dim(V ∩ H_i) <= (1-delta)/(1-r/s) * r on each, and
// runs the eps/4 fraction check on dim-1 spaces.
SubspaceReport run_subspace_exp(u32 instances, u64 seed);

}  // namespace listdec
