#pragma once

// Folded Reed-Solomon and univariate multiplicity codes over GF(p): parameter
// records, encoders, column distances, and the error channel used by the
// experiments.  A codeword is n columns of s field elements.

#include <span>
#include <vector>

#include "listdec/poly.hpp"
#include "listdec/rational.hpp"

namespace listdec {

struct Codeword {
    u32 n = 0, s = 0;
    std::vector<u32> a;  // column major: entry (column i, row j) at a[i*s + j]

    Codeword() = default;
    Codeword(u32 n_, u32 s_) : n(n_), s(s_), a((size_t)n_ * s_, 0) {}

    u32 at(u32 i, u32 j) const { return a[(size_t)i * s + j]; }
    u32& at(u32 i, u32 j) { return a[(size_t)i * s + j]; }
    std::span<const u32> column(u32 i) const { return {a.data() + (size_t)i * s, s}; }

    bool operator==(const Codeword&) const = default;
};

// Folded Reed-Solomon: column i carries the message evaluated at
// alpha^(i*s), ..., alpha^(i*s + s - 1).
struct FrsParams {
    Field field;
    u32 s, n, d;

    FrsParams(Field f, u32 s_, u32 n_, u32 d_);

    Rational rate() const { return Rational(d + 1, (i64)s * n); }
    Rational distance_bound() const { return Rational((i64)s * n - d, (i64)s * n); }
    u32 point(u32 t) const { return points_[t]; }  // alpha^t, t < n*s

  private:
    std::vector<u32> points_;
};

// Univariate multiplicity code: column i carries the Hasse derivatives
// P(a_i), P^(1)(a_i), ..., P^(s-1)(a_i).
struct MultParams {
    Field field;
    u32 s, n, d;
    std::vector<u32> points;  // n distinct evaluation points

    // Empty points means the default a_i = alpha^i (requires n <= q-1).
    MultParams(Field f, u32 s_, u32 n_, u32 d_, std::vector<u32> pts = {});

    Rational rate() const { return Rational(d + 1, (i64)s * n); }
    Rational distance_bound() const { return Rational((i64)s * n - d, (i64)s * n); }
};

// Per-position candidate sets for list recovery; ell is the largest set size
// (singleton sets recover plain list decoding).
struct RecoverySets {
    u32 n = 0, s = 0;
    std::vector<std::vector<std::vector<u32>>> sets;

    RecoverySets() = default;
    RecoverySets(u32 s_, std::vector<std::vector<std::vector<u32>>> sets_);

    u32 ell() const;
    static RecoverySets singletons(const Codeword& y);
};

Codeword encode_frs(const FrsParams& P, const Poly& message);
Codeword encode_mult(const MultParams& P, const Poly& message);

// Fraction of columns where the words differ (columns compared as a whole).
Rational dist_words(const Codeword& x, const Codeword& y);

// Fraction of columns i with x_i not a member of S_i.
Rational dist_sets(const Codeword& x, const RecoverySets& S);

// Replaces e uniformly chosen distinct columns by uniform columns different
// from the original, so exactly e columns differ.
Codeword corrupt(const Field& F, const Codeword& c, u32 e, Rng& rng);

}  // namespace listdec
