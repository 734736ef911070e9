#pragma once

// Closed-form evaluators for the decoding radii and list-size bounds.
// Radii and the fixed-m bounds are exact rationals; the capacity-scale list
// bounds are plain doubles.  Out-of-domain inputs throw, never clamp.

#include "listdec/field.hpp"
#include "listdec/rational.hpp"

namespace listdec {

// Decoding radius (m/(m+1)) * (1 - sR/(s-m+1)) for decoding parameter m and
// folding parameter s; may be <= 0 for extreme rates and is returned as-is.
Rational frs_radius(u32 m, u32 s, Rational R);

// Radius limit (L/(L+1))(1-R) for a (rho, L)-list decodable code of rate R.
Rational generalized_singleton(u32 L, Rational R);

// (1/eps)^(4/eps): list size for decoding at radius delta - eps, s >= 16/eps^2.
double list_bound_decoding(double eps);

// (ell/eps)^(4*ell/eps): list-recovery version, s >= 16*ell/eps^2.
double list_bound_recovery(u32 ell, double eps);

struct ImprovedRecoveryBound {
    double beta;      // contraction factor (1-d)(1+e/2)/((1-d+e)(1-r/s)), r = 4*ell/eps
    double exponent;  // 1/eps + log_{1/beta}(4*ell)
    double L;         // (4*ell/(eps*(1-delta+eps)))^exponent
};
ImprovedRecoveryBound list_bound_recovery_improved(u32 ell, double eps, double delta, u32 s);

// (ell/eps)^{(4*ell/eps)(1 + d/p)}; requires 4*ell/eps <= p.
double list_bound_mult(u32 ell, double eps, u32 d, u32 p);

struct FixedMBound {
    bool cond2_holds;      // (m-1)/(m+1) + (m-1)m/(m+1) * sR/(s-m+1) <= 1, decided exactly
    Rational L;            // the branch selected by cond2
    Rational case1_limit;  // (m-1)^{m-1} (m/(m-2))^{m-2}, the large-s form
    Rational case1_exact;  // (m-1)^{m-1} (rho/((m-2)(1-rho-R)))^{m-2} at this exact s
    Rational case2;        // (m+1)^{m-1} / ((1+mR)(1-R)^{m-2})
};
// List-size bound at the radius frs_radius(m, s, R) for fixed m >= 3.
FixedMBound fixed_m_bound(u32 m, u32 s, Rational R);

// m = 2 list-size bound 3(1-R)/(1-R + 2R/(s-1)); always < 3, so the list
// size is at most 2 at the corresponding radius.
Rational m2_bound(u32 s, Rational R);

// ell^r (n-r0)^r / ((e-r0) (e-(1-delta)n)^{r-1}) where e is the agreement
// count; requires e > (1-delta)n, e > r0, r >= 1.
Rational fine_bound(u32 n, u32 e, u32 r, u32 ell, Rational delta, u32 r0);

// ceil(eps^{-r} (r ln(ell/eps) + ln(1/eta))), clamped to at least 1.
u64 prune_iterations(double eps, u32 r, u32 ell, double eta);

}  // namespace listdec
