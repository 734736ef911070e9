#include "listdec/analysis.hpp"

#include <algorithm>
#include <map>

#include "listdec/bounds.hpp"

namespace listdec {

namespace {

void check_family(const std::vector<Codeword>& basis) {
    require(!basis.empty(), "analysis: need at least one basis vector");
    for (const auto& v : basis)
        require(v.n == basis[0].n && v.s == basis[0].s, "analysis: mixed shapes");
}

// Rank of the basis restricted to the given columns.
u32 column_rank(const Field& F, const std::vector<Codeword>& basis,
                const std::vector<u32>& cols) {
    const u32 r = (u32)basis.size();
    const u32 s = basis[0].s;
    Matrix M(r, (u32)cols.size() * s);
    for (u32 t = 0; t < r; ++t)
        for (u32 c = 0; c < cols.size(); ++c)
            for (u32 j = 0; j < s; ++j) M.at(t, c * s + j) = basis[t].at(cols[c], j);
    return rank(F, std::move(M));
}

u32 full_rank(const Field& F, const std::vector<Codeword>& basis) {
    const u32 r = (u32)basis.size();
    const u32 n = basis[0].n, s = basis[0].s;
    Matrix M(r, n * s);
    for (u32 t = 0; t < r; ++t) std::copy(basis[t].a.begin(), basis[t].a.end(), M.row(t));
    return rank(F, std::move(M));
}

std::vector<u32> per_column_dims(const Field& F, const std::vector<Codeword>& basis) {
    const u32 r = (u32)basis.size();
    const u32 n = basis[0].n;
    std::vector<u32> dims(n);
    for (u32 i = 0; i < n; ++i) dims[i] = r - column_rank(F, basis, {i});
    return dims;
}

}  // namespace

SubspaceStats column_kernel_dims(const Field& F, const std::vector<Codeword>& basis,
                                 Rational delta) {
    check_family(basis);
    const u32 r = (u32)basis.size();
    const u32 n = basis[0].n, s = basis[0].s;
    require(r < s, "analysis: expectation bound needs dim V < s");
    require(full_rank(F, basis) == r, "analysis: basis vectors are dependent");

    SubspaceStats st;
    st.r = r;
    st.n = n;
    st.s = s;
    st.delta = delta;
    st.dims = per_column_dims(F, basis);
    i64 sum = 0;
    for (u32 dim : st.dims) sum += dim;
    st.mean = Rational(sum, n);
    st.bound = (Rational(1) - delta) / (Rational(1) - Rational(r, s)) * Rational(r);
    st.r0 = (u32)std::count(st.dims.begin(), st.dims.end(), r);
    st.within_bound = st.mean <= st.bound;
    return st;
}

Rational iterative_fraction_check(const Field& F, const std::vector<Codeword>& basis,
                                  const std::vector<u32>& agreement, Rational eps,
                                  Rational delta) {
    check_family(basis);
    const u32 r = (u32)basis.size();
    const u32 n = basis[0].n, s = basis[0].s;
    require(full_rank(F, basis) == r, "analysis: basis vectors are dependent");
    require(r >= 1, "iterative check: need dim U >= 1");
    require(Rational(r, s) <= eps / Rational(4), "iterative check: need dim(U)/s <= eps/4");
    require(Rational((i64)agreement.size()) >= (Rational(1) - delta + eps) * Rational(n),
            "iterative check: agreement set too small");
    for (u32 i : agreement) require(i < n, "iterative check: agreement index out of range");

    Rational beta = (Rational(1) - delta) * (Rational(1) + eps / Rational(2)) /
                    ((Rational(1) - delta + eps) * (Rational(1) - Rational(r, s)));
    const i64 threshold = (beta * Rational(r)).floor();

    auto dims = per_column_dims(F, basis);
    u32 cnt = 0;
    for (u32 i : agreement)
        if ((i64)dims[i] <= threshold) ++cnt;
    Rational frac(cnt, (i64)agreement.size());
    ensure(frac >= eps / Rational(4), "iterative check: fraction fell below eps/4");
    return frac;
}

ValidVectorStats valid_vector_stats(const Field& F, const std::vector<Codeword>& basis,
                                    u32 t_max, u64 budget) {
    check_family(basis);
    const u32 r = (u32)basis.size();
    const u32 n = basis[0].n;
    require(full_rank(F, basis) == r, "analysis: basis vectors are dependent");
    u128 work = 1;
    for (u32 t = 0; t < t_max; ++t) {
        work *= n;
        if (work > budget) throw BudgetError("valid vectors: n^t_max exceeds the budget");
    }

    // Once the projection dimension reaches r the closure is all of [n], so
    // entries with i >= r are n; they are still reported up to t_max.
    const u32 t_eff = t_max;
    ValidVectorStats st;
    st.r_seq.assign(t_eff + 1, UINT32_MAX);
    st.R_seq.assign(t_eff + 1, 0);

    std::map<std::vector<u32>, u32> rank_cache;
    auto rank_of = [&](const std::vector<u32>& cols) {
        auto it = rank_cache.find(cols);
        if (it != rank_cache.end()) return it->second;
        u32 rk = cols.empty() ? 0 : column_rank(F, basis, cols);
        rank_cache.emplace(cols, rk);
        return rk;
    };
    auto with = [](std::vector<u32> cols, u32 j) {
        auto it = std::lower_bound(cols.begin(), cols.end(), j);
        if (it == cols.end() || *it != j) cols.insert(it, j);
        return cols;
    };

    // Depth-first over valid prefixes; the closure size only depends on the
    // coordinate set, which the cache exploits across permutations.
    auto visit = [&](auto&& self, const std::vector<u32>& set, u32 dim, u32 depth) -> void {
        u32 closure = 0;
        for (u32 j = 0; j < n; ++j)
            if (rank_of(with(set, j)) == dim) ++closure;
        st.r_seq[depth] = std::min(st.r_seq[depth], closure);
        st.R_seq[depth] = std::max(st.R_seq[depth], closure);
        if (depth == t_eff) return;
        for (u32 j = 0; j < n; ++j) {
            auto next = with(set, j);
            u32 nd = rank_of(next);
            if (nd >= std::min(r, dim + 1)) self(self, next, nd, depth + 1);
        }
    };
    visit(visit, {}, 0, 0);
    return st;
}

Rational apply_fine_bound(const SubspaceStats& stats, u32 e, u32 ell) {
    return fine_bound(stats.n, e, stats.r, ell, stats.delta, stats.r0);
}

std::vector<Codeword> independent_subset(const Field& F, const std::vector<Codeword>& vectors) {
    std::vector<Codeword> kept;
    for (const auto& v : vectors) {
        auto trial = kept;
        trial.push_back(v);
        if (full_rank(F, trial) == trial.size()) kept = std::move(trial);
    }
    return kept;
}

}  // namespace listdec
