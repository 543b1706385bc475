#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msrcode/gf.hpp"

namespace msr {

/// Dense row-major matrix over F_Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t size) {
        Matrix m(size, size);
        for (std::size_t i = 0; i < size; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gf_elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    gf_elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<gf_elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const gf_elem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<gf_elem> data_;
};

/// Pivot selection order for elimination; either gives the exact rank, the
/// second exists so rank results can be cross-checked over a different
/// elimination path.
enum class PivotPolicy { FirstNonzero, LastNonzero };

/// Exact row rank by Gaussian elimination.
std::size_t gf_rank(Matrix a, const Field& f,
                    PivotPolicy policy = PivotPolicy::FirstNonzero);

std::vector<gf_elem> mat_vec(const Matrix& a, std::span<const gf_elem> x,
                             const Field& f);
Matrix mat_mul(const Matrix& a, const Matrix& b, const Field& f);

/// Solves A x = b for a fixed A with rows >= cols and many right-hand
/// sides. Construction reduces [A | I] once; each solve is a dense
/// mat-vec with the recorded transform T (T A = [I; 0]).
///
/// When rows > cols the trailing rows of T b act as a consistency check;
/// solve throws DataError if they are nonzero.
class LinearSystem {
public:
    LinearSystem(const Matrix& a, const Field& f);

    bool full_column_rank() const { return rank_ == cols_; }
    std::size_t rank() const { return rank_; }

    /// The recorded row transform; equals A^-1 when A is square and
    /// invertible.
    const Matrix& transform() const { return transform_; }

    /// Throws InternalError if the system is column-rank-deficient and
    /// DataError if b is inconsistent with A.
    std::vector<gf_elem> solve(std::span<const gf_elem> b) const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t rank_ = 0;
    Matrix transform_;  // rows x rows
};

} // namespace msr
