#include "msrcode/linalg.hpp"

#include <algorithm>
#include <utility>

namespace msr {

std::size_t gf_rank(Matrix a, const Field& f, PivotPolicy policy) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        if (policy == PivotPolicy::FirstNonzero) {
            for (std::size_t r = rank; r < rows; ++r)
                if (a.at(r, col) != 0) {
                    pivot = r;
                    break;
                }
        } else {
            for (std::size_t r = rows; r-- > rank;)
                if (a.at(r, col) != 0) {
                    pivot = r;
                    break;
                }
        }
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(),
                             a.row(rank).begin());
        const gf_elem inv_p = f.inv(a.at(rank, col));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const gf_elem factor = f.mul(a.at(r, col), inv_p);
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < cols; ++c)
                a.at(r, c) = Field::add(a.at(r, c), f.mul(factor, a.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::vector<gf_elem> mat_vec(const Matrix& a, std::span<const gf_elem> x,
                             const Field& f) {
    std::vector<gf_elem> y(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        gf_elem acc = 0;
        const auto row = a.row(r);
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc = Field::add(acc, f.mul(row[c], x[c]));
        y[r] = acc;
    }
    return y;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const Field& f) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const gf_elem v = a.at(r, i);
            if (v == 0)
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(r, c) = Field::add(out.at(r, c), f.mul(v, b.at(i, c)));
        }
    return out;
}

LinearSystem::LinearSystem(const Matrix& a, const Field& f)
    : field_(f), rows_(a.rows()), cols_(a.cols()) {
    // Gauss-Jordan on [A | I]; T ends up with T A = [I; 0].
    Matrix work = a;
    transform_ = Matrix::identity(rows_);
    for (std::size_t col = 0; col < cols_ && rank_ < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t r = rank_; r < rows_; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows_)
            continue;
        if (pivot != rank_) {
            std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(),
                             work.row(rank_).begin());
            std::swap_ranges(transform_.row(pivot).begin(),
                             transform_.row(pivot).end(),
                             transform_.row(rank_).begin());
        }
        const gf_elem inv_p = field_.inv(work.at(rank_, col));
        for (std::size_t c = 0; c < cols_; ++c)
            work.at(rank_, c) = field_.mul(work.at(rank_, c), inv_p);
        for (std::size_t c = 0; c < rows_; ++c)
            transform_.at(rank_, c) = field_.mul(transform_.at(rank_, c), inv_p);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank_)
                continue;
            const gf_elem factor = work.at(r, col);
            if (factor == 0)
                continue;
            for (std::size_t c = 0; c < cols_; ++c)
                work.at(r, c) =
                    Field::add(work.at(r, c), field_.mul(factor, work.at(rank_, c)));
            for (std::size_t c = 0; c < rows_; ++c)
                transform_.at(r, c) = Field::add(
                    transform_.at(r, c), field_.mul(factor, transform_.at(rank_, c)));
        }
        ++rank_;
    }
}

std::vector<gf_elem> LinearSystem::solve(std::span<const gf_elem> b) const {
    if (!full_column_rank())
        throw InternalError("linalg: solve on a column-rank-deficient system");
    if (b.size() != rows_)
        throw InternalError("linalg: right-hand side size mismatch");
    std::vector<gf_elem> tb = mat_vec(transform_, b, field_);
    for (std::size_t r = cols_; r < rows_; ++r)
        if (tb[r] != 0)
            throw DataError("linalg: inconsistent system (corrupt input data)");
    tb.resize(cols_);
    return tb;
}

} // namespace msr
