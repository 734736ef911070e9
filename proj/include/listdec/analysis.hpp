#pragma once

// Subspace statistics computed on real decoder outputs: per-column kernel
// dimensions dim(V ∩ H_i), the zero-projection count r0, the r_i/R_i
// sequences obtained from valid coordinate vectors, and the fine list-size
// bound applied to measured quantities.

#include "listdec/codes.hpp"
#include "listdec/linalg.hpp"

namespace listdec {

struct SubspaceStats {
    std::vector<u32> dims;  // dim(V ∩ H_i) per column, H_i = {v : column i of v is 0}
    Rational mean;          // average of dims
    Rational bound;         // (1-delta)/(1-r/s) * r
    u32 r0 = 0;             // columns where the projection of V is zero
    u32 r = 0;              // dim V
    u32 n = 0, s = 0;
    Rational delta;
    bool within_bound = false;
};

// V is given by an independent basis of codeword-space vectors; requires
// r < s so the expectation bound applies.
SubspaceStats column_kernel_dims(const Field& F, const std::vector<Codeword>& basis,
                                 Rational delta);

// Measured fraction of i in the agreement set A with
// dim(U ∩ H_i) <= floor(beta * dim U); asserts it is at least eps/4.
// Requires |A| >= (1 - delta + eps) n and dim(U)/s <= eps/4.
Rational iterative_fraction_check(const Field& F, const std::vector<Codeword>& basis,
                                  const std::vector<u32>& agreement, Rational eps,
                                  Rational delta);

// r_i = min and R_i = max closure size over valid coordinate vectors of
// length i, for i = 0 .. min(t_max, r-1).  A vector is valid when each new
// coordinate raises the projection dimension until it reaches r; the closure
// of u is every coordinate whose addition leaves dim(V_u) unchanged.
struct ValidVectorStats {
    std::vector<u32> r_seq;
    std::vector<u32> R_seq;
};
ValidVectorStats valid_vector_stats(const Field& F, const std::vector<Codeword>& basis,
                                    u32 t_max, u64 budget);

// fine_bound evaluated with the measured r0 of these stats; e is the
// agreement count.
Rational apply_fine_bound(const SubspaceStats& stats, u32 e, u32 ell);

// Maximal independent subset (used to compare the direction space against
// the span including the offset).
std::vector<Codeword> independent_subset(const Field& F, const std::vector<Codeword>& vectors);

}  // namespace listdec
