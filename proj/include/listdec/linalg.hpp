#pragma once

// Dense matrices over GF(p) and exact Gaussian elimination.  Pivoting is
// deterministic: leftmost pivot column, first nonzero row.

#include <optional>
#include <vector>

#include "listdec/field.hpp"

namespace listdec {

class Matrix {
  public:
    Matrix() = default;
    Matrix(u32 rows, u32 cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

    u32 rows() const { return rows_; }
    u32 cols() const { return cols_; }

    u32& at(u32 r, u32 c) { return a_[(size_t)r * cols_ + c]; }
    u32 at(u32 r, u32 c) const { return a_[(size_t)r * cols_ + c]; }
    u32* row(u32 r) { return a_.data() + (size_t)r * cols_; }
    const u32* row(u32 r) const { return a_.data() + (size_t)r * cols_; }

  private:
    u32 rows_ = 0, cols_ = 0;
    std::vector<u32> a_;
};

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<u32> rref_inplace(const Field& F, Matrix& M);

u32 rank(const Field& F, Matrix M);

// Basis of the null space of A, one vector per free column in ascending
// column order (this fixes the tie-breaking everywhere a "first" kernel
// vector is needed).
std::vector<std::vector<u32>> kernel_basis(const Field& F, Matrix A);

struct AffineSolution {
    std::vector<u32> particular;              // free variables set to zero
    std::vector<std::vector<u32>> kernel;     // independent basis of the null space
};

// Full solution set of A x = b as particular + span(kernel); nullopt when the
// system is inconsistent (a value, not a fault).
std::optional<AffineSolution> solve_affine(const Field& F, Matrix A, const std::vector<u32>& b);

}  // namespace listdec
