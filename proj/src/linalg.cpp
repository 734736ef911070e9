#include "listdec/linalg.hpp"

#include <algorithm>

namespace listdec {

std::vector<u32> rref_inplace(const Field& F, Matrix& M) {
    std::vector<u32> pivots;
    u32 prow = 0;
    for (u32 col = 0; col < M.cols() && prow < M.rows(); ++col) {
        u32 sel = prow;
        while (sel < M.rows() && M.at(sel, col) == 0) ++sel;
        if (sel == M.rows()) continue;
        if (sel != prow) std::swap_ranges(M.row(sel), M.row(sel) + M.cols(), M.row(prow));

        u32 pv = M.at(prow, col);
        if (pv != 1) {
            u32 ipv = F.inv(pv);
            u32* r = M.row(prow);
            for (u32 j = col; j < M.cols(); ++j) r[j] = F.mul(r[j], ipv);
        }
        const u32* src = M.row(prow);
        for (u32 r2 = 0; r2 < M.rows(); ++r2) {
            if (r2 == prow) continue;
            u32 f = M.at(r2, col);
            if (f == 0) continue;
            u32 fn = F.p - f;
            u32* dst = M.row(r2);
            for (u32 j = col; j < M.cols(); ++j)
                dst[j] = F.reduce(dst[j] + (u64)fn * src[j]);
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

u32 rank(const Field& F, Matrix M) { return (u32)rref_inplace(F, M).size(); }

namespace {

std::vector<std::vector<u32>> kernel_from_rref(const Field& F, const Matrix& M,
                                               const std::vector<u32>& pivots, u32 cols) {
    std::vector<bool> is_pivot(cols, false);
    for (u32 c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u32>> basis;
    for (u32 fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<u32> v(cols, 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(M.at((u32)i, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<u32>> kernel_basis(const Field& F, Matrix A) {
    u32 cols = A.cols();
    auto pivots = rref_inplace(F, A);
    return kernel_from_rref(F, A, pivots, cols);
}

std::optional<AffineSolution> solve_affine(const Field& F, Matrix A, const std::vector<u32>& b) {
    require(A.rows() == b.size(), "solve_affine: rhs length mismatch");
    u32 cols = A.cols();
    Matrix M(A.rows(), cols + 1);
    for (u32 r = 0; r < A.rows(); ++r) {
        std::copy(A.row(r), A.row(r) + cols, M.row(r));
        M.at(r, cols) = b[r];
    }
    auto pivots = rref_inplace(F, M);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = nonzero row

    AffineSolution sol;
    sol.particular.assign(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = M.at((u32)i, cols);
    sol.kernel = kernel_from_rref(F, M, pivots, cols);
    return sol;
}

}  // namespace listdec
