#pragma once

// Randomized pruning of a candidate space down to the actual list, plus the
// exhaustive enumerator used as its exact counterpart.  Both operate on an
// affine candidate space together with the per-position recovery sets.

#include <functional>
#include <optional>

#include "listdec/decoder.hpp"

namespace listdec {

using EncodeFn = std::function<Codeword(const Poly&)>;

struct PruneConfig {
    Rational epsilon;                 // gap delta - rho driving the iteration count
    double eta = 0.01;                // failure probability target
    std::optional<u64> iterations;    // explicit override of the default count
    u64 seed = 0;
};

// Each iteration draws r coordinates uniformly from [n]^r (with replacement)
// and, for every choice of one candidate per coordinate, keeps the member of
// the space matching those columns when it is unique.  The merged output is
// deduplicated, filtered by dist_sets <= rho, and sorted; with the default
// iteration count every codeword within rho appears with probability at
// least 1 - eta.
std::vector<Poly> prune(const Field& F, const CandidateSpace& space, const RecoverySets& S,
                        Rational rho, const PruneConfig& cfg, const EncodeFn& encode);

// All q^r members of the space with dist_sets <= rho, sorted by coefficient
// lexicographic order.  Refuses when q^r exceeds the budget.
std::vector<Poly> enumerate_list(const Field& F, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget,
                                 const EncodeFn& encode);

// Convenience overloads binding the matching encoder.
std::vector<Poly> prune(const FrsParams& P, const CandidateSpace& space, const RecoverySets& S,
                        Rational rho, const PruneConfig& cfg);
std::vector<Poly> enumerate_list(const FrsParams& P, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget);
std::vector<Poly> enumerate_list(const MultParams& P, const CandidateSpace& space,
                                 const RecoverySets& S, Rational rho, u64 budget);

}  // namespace listdec
