#include "listdec/bounds.hpp"

#include <cmath>

namespace listdec {

Rational frs_radius(u32 m, u32 s, Rational R) {
    require(m >= 1, "frs_radius: need m >= 1");
    require(m <= s, "frs_radius: need m <= s");
    require(R > Rational(0) && R < Rational(1), "frs_radius: need 0 < R < 1");
    Rational inner = Rational(1) - Rational(s) * R / Rational(s - m + 1);
    return Rational(m, (i64)m + 1) * inner;
}

Rational generalized_singleton(u32 L, Rational R) {
    require(L >= 1, "generalized_singleton: need L >= 1");
    return Rational(L, (i64)L + 1) * (Rational(1) - R);
}

double list_bound_decoding(double eps) {
    require(eps > 0 && eps <= 1, "list_bound_decoding: need 0 < eps <= 1");
    return std::pow(1.0 / eps, 4.0 / eps);
}

double list_bound_recovery(u32 ell, double eps) {
    require(ell >= 1, "list_bound_recovery: need ell >= 1");
    require(eps > 0 && eps <= 1, "list_bound_recovery: need 0 < eps <= 1");
    return std::pow(ell / eps, 4.0 * ell / eps);
}

ImprovedRecoveryBound list_bound_recovery_improved(u32 ell, double eps, double delta, u32 s) {
    require(ell >= 1, "improved bound: need ell >= 1");
    require(eps > 0 && eps < delta && delta < 1, "improved bound: need 0 < eps < delta < 1");
    double r = 4.0 * ell / eps;
    require(r / s <= eps / 4.0, "improved bound: need r/s <= eps/4 (i.e. 16*ell/eps^2 <= s)");
    double beta = (1.0 - delta) * (1.0 + eps / 2.0) / ((1.0 - delta + eps) * (1.0 - r / s));
    ensure(beta < 1.0, "improved bound: beta must be < 1 on the stated domain");
    double exponent = 1.0 / eps + std::log(4.0 * ell) / std::log(1.0 / beta);
    double L = std::pow(4.0 * ell / (eps * (1.0 - delta + eps)), exponent);
    return {beta, exponent, L};
}

double list_bound_mult(u32 ell, double eps, u32 d, u32 p) {
    require(is_prime(p), "mult bound: p must be prime");
    require(ell >= 1, "mult bound: need ell >= 1");
    require(eps > 0 && eps <= 1, "mult bound: need 0 < eps <= 1");
    require(4.0 * ell / eps <= (double)p, "mult bound: need 4*ell/eps <= char");
    double expo = (4.0 * ell / eps) * (1.0 + (double)d / p);
    return std::pow(ell / eps, expo);
}

FixedMBound fixed_m_bound(u32 m, u32 s, Rational R) {
    require(m >= 3, "fixed_m_bound: need m >= 3 (use m2_bound for m = 2)");
    require(s >= m, "fixed_m_bound: need s >= m");
    require(R > Rational(0) && R < Rational(1), "fixed_m_bound: need 0 < R < 1");

    Rational srr = Rational(s) * R / Rational(s - m + 1);
    Rational lhs = Rational(m - 1, (i64)m + 1) + Rational((i64)(m - 1) * m, (i64)m + 1) * srr;
    bool cond2 = lhs <= Rational(1);

    FixedMBound out;
    out.cond2_holds = cond2;
    out.case1_limit =
        rat_pow(Rational(m - 1), m - 1) * rat_pow(Rational(m, (i64)m - 2), m - 2);

    // At finite s the case-1 maximizer gives (m-1)^{m-1} (rho/((m-2)(1-rho-R)))^{m-2}
    // with rho the exact decoding radius; 1-rho-R > 0 holds throughout the domain.
    Rational rho = frs_radius(m, s, R);
    Rational denom = (Rational(1) - rho - R) * Rational(m - 2);
    out.case1_exact = rat_pow(Rational(m - 1), m - 1) * rat_pow(rho / denom, m - 2);

    Rational c2den = (Rational(1) + Rational(m) * R) * rat_pow(Rational(1) - R, m - 2);
    out.case2 = rat_pow(Rational(m + 1), m - 1) / c2den;

    out.L = cond2 ? out.case1_limit : out.case2;
    return out;
}

Rational m2_bound(u32 s, Rational R) {
    require(s >= 2, "m2_bound: need s >= 2");
    require(R > Rational(0) && R < Rational(1), "m2_bound: need 0 < R < 1");
    Rational one_minus = Rational(1) - R;
    Rational val = Rational(3) * one_minus / (one_minus + Rational(2) * R / Rational(s - 1));
    ensure(val < Rational(3), "m2_bound: value must be below 3");
    return val;
}

Rational fine_bound(u32 n, u32 e, u32 r, u32 ell, Rational delta, u32 r0) {
    require(r >= 1, "fine_bound: need r >= 1");
    require(ell >= 1, "fine_bound: need ell >= 1");
    require(e > r0, "fine_bound: need e > r0");
    Rational slack = Rational(e) - (Rational(1) - delta) * Rational(n);
    require(slack > Rational(0), "fine_bound: need e > (1-delta)*n");
    Rational numer = rat_pow(Rational(ell), r) * rat_pow(Rational((i64)n - r0), r);
    Rational denom = Rational((i64)e - r0) * rat_pow(slack, r - 1);
    return numer / denom;
}

u64 prune_iterations(double eps, u32 r, u32 ell, double eta) {
    require(eps > 0 && eps < 1, "prune_iterations: need 0 < eps < 1");
    require(eta > 0 && eta < 1, "prune_iterations: need 0 < eta < 1");
    require(ell >= 1, "prune_iterations: need ell >= 1");
    if (r == 0) return 1;
    double v = std::pow(1.0 / eps, (double)r) *
               (r * std::log((double)ell / eps) + std::log(1.0 / eta));
    double c = std::ceil(v);
    if (!(c >= 1.0)) return 1;
    return (u64)c;
}

}  // namespace listdec
