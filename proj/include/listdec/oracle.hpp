#pragma once

// Brute-force ground truth: the exact list by enumerating every message
// polynomial.  Only viable when q^(d+1) fits the budget; used to validate
// the decoder, prune, and the list-size bounds on tiny parameters.

#include "listdec/prune.hpp"

namespace listdec {

struct OracleBudget {
    u64 max_messages = (u64)1 << 25;
};

// All messages whose encoding is within rho of the sets, lexicographically
// sorted by coefficient vector.
std::vector<Poly> brute_force_list(const FrsParams& P, const RecoverySets& S, Rational rho,
                                   OracleBudget budget = {});
std::vector<Poly> brute_force_list(const MultParams& P, const RecoverySets& S, Rational rho,
                                   OracleBudget budget = {});

// Maximum brute-force list size over `trials` received words, each the worst
// of `patterns` random error patterns at floor(rho*n) errors.
u32 max_list_size_sweep(const FrsParams& P, Rational rho, u32 trials, u32 patterns, Rng& rng,
                        OracleBudget budget = {});

}  // namespace listdec
