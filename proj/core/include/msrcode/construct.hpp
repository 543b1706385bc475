#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msrcode/gf.hpp"
#include "msrcode/linalg.hpp"
#include "msrcode/params.hpp"

namespace msr {

/// (n-k) x n Cauchy matrix: entries[r][j] = 1/(a_r + b_j) over F_Q.
/// Every square submatrix of a Cauchy matrix is nonsingular, which is what
/// makes any k blocks decodable and any d helpers usable.
struct CauchyMatrix {
    int rows = 0;  // n - k
    int cols = 0;  // n
    std::vector<gf_elem> a;  // rows elements
    std::vector<gf_elem> b;  // cols elements; a and b jointly distinct
    std::vector<gf_elem> entries;  // row-major

    gf_elem at(int r, int j) const {
        return entries[static_cast<std::size_t>((r - 1) * cols + (j - 1))];
    }

    /// Validates distinctness and recomputes entries from a and b.
    static CauchyMatrix from_elements(std::vector<gf_elem> a, std::vector<gf_elem> b,
                                      const Field& f);
};

/// Canonical Cauchy matrix for the code: a_r = r-1, b_j = (n-k) + j-1.
/// Requires Q >= 2n-k; throws FieldError advising a wider field otherwise.
CauchyMatrix build_cauchy(const CodeParams& p, const Field& f);

struct SparseEntry {
    std::uint32_t col = 0;
    gf_elem coeff = 0;
    bool operator==(const SparseEntry&) const = default;
};

/// One parity constraint, entries sorted by column.
using SparseRow = std::vector<SparseEntry>;

/// Anchor constraint r (1-based, r <= n-d) for tuple x: one entry per node,
/// all at tuple x, coefficients from Cauchy row r. The n-d constraints per
/// tuple let any d of the n symbols at that tuple determine the rest.
SparseRow type1_row(const CauchyMatrix& cauchy, const CodeParams& p, int r,
                    std::span<const int> x);

/// Shift constraint for (delta, x): a diagonal part over all nodes at tuple
/// x with coefficients from Cauchy row n-d+delta, plus a rho-weighted entry
/// at node (g, x_g) and tuple (x with x_g -> x_g - delta) for every group g
/// whose node exists. Weight n+m, or n+m-1 when the last group's node is
/// missing.
SparseRow type2_row(const CauchyMatrix& cauchy, const CodeParams& p, gf_elem rho,
                    int delta, std::span<const int> x);

/// The (n-k)alpha x n*alpha parity-check matrix, stored sparse by row.
///
/// Row layout: anchor rows first, grouped by constraint index then tuple
/// index; shift rows after, grouped by delta then tuple index. Column of
/// symbol (node j, tuple x) is (j-1)*alpha + tuple_index(x).
class ParityCheck {
public:
    ParityCheck(CodeParams params, Field field, CauchyMatrix cauchy, gf_elem rho);

    const CodeParams& params() const { return params_; }
    const Field& field() const { return field_; }
    const CauchyMatrix& cauchy() const { return cauchy_; }
    gf_elem rho() const { return rho_; }

    std::size_t row_count() const { return offsets_.size() - 1; }
    std::size_t col_count() const {
        return static_cast<std::size_t>(params_.n) * params_.alpha;
    }
    std::size_t type1_row_count() const {
        return static_cast<std::size_t>(params_.n - params_.d) * params_.alpha;
    }

    std::span<const SparseEntry> row(std::size_t r) const {
        return {entries_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }

    /// Dense (n-k)alpha x |S|alpha restriction to the column blocks of the
    /// nodes in S (1-based, strictly ascending).
    Matrix submatrix(std::span<const int> nodes) const;

    /// Copy with every rho entry removed; what remains is the Cauchy matrix
    /// expanded blockwise over tuples.
    ParityCheck without_shift_entries() const;

private:
    ParityCheck() = default;

    CodeParams params_;
    Field field_ = Field::gf256();
    CauchyMatrix cauchy_;
    gf_elem rho_ = 0;
    std::vector<std::size_t> offsets_;  // row_count + 1
    std::vector<SparseEntry> entries_;
};

/// Assemble the full parity-check matrix with the canonical Cauchy base.
/// rho must be nonzero (a zero rho would make repair divide by zero).
ParityCheck build_parity_check(const CodeParams& p, const Field& f, gf_elem rho);

/// Same, over an explicit Cauchy matrix (used when rebuilding from a spec
/// file, which must reproduce the generating run bit-exactly).
ParityCheck build_parity_check(const CodeParams& p, const Field& f,
                               const CauchyMatrix& cauchy, gf_elem rho);

} // namespace msr
