#pragma once

// Linear-algebraic list decoding.  The interpolation step finds a nonzero
// Q(X, Y_1..Y_m) = A_0(X) + sum_k A_k(X) Y_k vanishing on the received data;
// the extraction step solves the induced linear system on the message
// coefficients.  The result is an affine space of message polynomials that
// contains every codeword within the guaranteed agreement threshold.

#include <span>

#include "listdec/codes.hpp"
#include "listdec/linalg.hpp"

namespace listdec {

struct CandidateSpace {
    bool empty = false;       // extraction inconsistent: no codeword within radius
    Poly offset;              // deg <= d
    std::vector<Poly> basis;  // independent directions, each deg <= d
    u32 m = 0;                // decoding parameter used
    u32 D = 0;                // interpolation degree used

    // Affine dimension; -1 encodes the empty space.
    int dim() const { return empty ? -1 : (int)basis.size(); }
};

// Every message whose codeword agrees with the sets in more than
// (D + d)/(s - m + 1) columns lies in the returned space, and the space has
// dimension at most m-1 (checked at runtime).
CandidateSpace frs_list_recover(const FrsParams& P, const RecoverySets& S, u32 m);

// List decoding = recovery with singleton sets.
CandidateSpace frs_list_decode(const FrsParams& P, const Codeword& y, u32 m);

// Multiplicity-code analog (list decoding only); requires q > d so the
// dimension bound m-1 applies.
CandidateSpace mult_list_decode(const MultParams& P, const Codeword& y, u32 m);

struct RadiusThreshold {
    u32 D;           // interpolation degree
    u32 t_min;       // smallest agreement count with a containment guarantee
    i64 max_errors;  // n - t_min
};

RadiusThreshold radius_threshold(const FrsParams& P, u32 m, u32 ell);
RadiusThreshold radius_threshold(const MultParams& P, u32 m);

// Membership of f in the affine space (exact, by solving for coordinates).
bool space_contains(const Field& F, const CandidateSpace& space, const Poly& f);

// offset + sum_t lambda[t] * basis[t].
Poly space_member(const Field& F, const CandidateSpace& space, std::span<const u32> lambda);

}  // namespace listdec
