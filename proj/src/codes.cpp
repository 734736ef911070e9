#include "listdec/codes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace listdec {

FrsParams::FrsParams(Field f, u32 s_, u32 n_, u32 d_) : field(f), s(s_), n(n_), d(d_) {
    require(s >= 1 && n >= 1, "frs: need s >= 1 and n >= 1");
    require((u64)n * s <= (u64)field.p - 1, "frs: need n <= (q-1)/s");
    require((u64)d < (u64)s * n, "frs: need d < s*n");
    points_.resize((size_t)n * s);
    u32 x = 1 % field.p;
    for (auto& pt : points_) {
        pt = x;
        x = field.mul(x, field.alpha);
    }
}

MultParams::MultParams(Field f, u32 s_, u32 n_, u32 d_, std::vector<u32> pts)
    : field(f), s(s_), n(n_), d(d_), points(std::move(pts)) {
    require(s >= 1 && n >= 1, "mult: need s >= 1 and n >= 1");
    require(n <= field.p, "mult: need n <= q");
    require((u64)d < (u64)s * n, "mult: need d < s*n");
    if (points.empty()) {
        require(n <= field.p - 1, "mult: default points alpha^i need n <= q-1");
        points.resize(n);
        u32 x = 1 % field.p;
        for (auto& pt : points) {
            pt = x;
            x = field.mul(x, field.alpha);
        }
    }
    require(points.size() == n, "mult: need exactly n evaluation points");
    std::unordered_set<u32> seen;
    for (u32 pt : points) {
        require(pt < field.p, "mult: evaluation point out of range");
        require(seen.insert(pt).second, "mult: evaluation points must be distinct");
    }
}

RecoverySets::RecoverySets(u32 s_, std::vector<std::vector<std::vector<u32>>> sets_)
    : n((u32)sets_.size()), s(s_), sets(std::move(sets_)) {
    for (const auto& set : sets) {
        require(!set.empty(), "sets: each position needs at least one candidate");
        for (const auto& col : set)
            require(col.size() == s, "sets: candidate column has wrong length");
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j)
                require(set[i] != set[j], "sets: duplicate candidate in one position");
    }
}

u32 RecoverySets::ell() const {
    size_t m = 1;
    for (const auto& set : sets) m = std::max(m, set.size());
    return (u32)m;
}

RecoverySets RecoverySets::singletons(const Codeword& y) {
    std::vector<std::vector<std::vector<u32>>> sets(y.n);
    for (u32 i = 0; i < y.n; ++i) {
        auto col = y.column(i);
        sets[i].push_back(std::vector<u32>(col.begin(), col.end()));
    }
    return RecoverySets(y.s, std::move(sets));
}

Codeword encode_frs(const FrsParams& P, const Poly& message) {
    require(message.deg() <= (int)P.d, "encode: message degree too large");
    Codeword cw(P.n, P.s);
    for (u32 t = 0; t < P.n * P.s; ++t) cw.a[t] = eval(P.field, message, P.point(t));
    return cw;
}

Codeword encode_mult(const MultParams& P, const Poly& message) {
    require(message.deg() <= (int)P.d, "encode: message degree too large");
    Codeword cw(P.n, P.s);
    for (u32 j = 0; j < P.s; ++j) {
        Poly der = hasse_derivative(P.field, message, j);
        for (u32 i = 0; i < P.n; ++i) cw.at(i, j) = eval(P.field, der, P.points[i]);
    }
    return cw;
}

Rational dist_words(const Codeword& x, const Codeword& y) {
    require(x.n == y.n && x.s == y.s, "dist: shape mismatch");
    u32 differ = 0;
    for (u32 i = 0; i < x.n; ++i) {
        auto a = x.column(i), b = y.column(i);
        if (!std::equal(a.begin(), a.end(), b.begin())) ++differ;
    }
    return Rational(differ, x.n);
}

Rational dist_sets(const Codeword& x, const RecoverySets& S) {
    require(x.n == S.n && x.s == S.s, "dist: shape mismatch");
    u32 misses = 0;
    for (u32 i = 0; i < x.n; ++i) {
        auto col = x.column(i);
        bool hit = false;
        for (const auto& cand : S.sets[i]) {
            if (std::equal(col.begin(), col.end(), cand.begin())) {
                hit = true;
                break;
            }
        }
        if (!hit) ++misses;
    }
    return Rational(misses, x.n);
}

Codeword corrupt(const Field& F, const Codeword& c, u32 e, Rng& rng) {
    require(e <= c.n, "corrupt: more errors than columns");
    Codeword out = c;
    std::vector<u32> idx(c.n);
    std::iota(idx.begin(), idx.end(), 0);
    for (u32 t = 0; t < e; ++t) {
        u32 j = t + (u32)rng.below(c.n - t);
        std::swap(idx[t], idx[j]);
        u32 col = idx[t];
        std::vector<u32> fresh(c.s);
        for (;;) {
            for (auto& v : fresh) v = (u32)rng.below(F.p);
            if (!std::equal(fresh.begin(), fresh.end(), c.column(col).begin())) break;
        }
        std::copy(fresh.begin(), fresh.end(), out.a.begin() + (size_t)col * c.s);
    }
    return out;
}

}  // namespace listdec
