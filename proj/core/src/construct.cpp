#include "msrcode/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace msr {

CauchyMatrix CauchyMatrix::from_elements(std::vector<gf_elem> a,
                                         std::vector<gf_elem> b, const Field& f) {
    std::set<gf_elem> seen(a.begin(), a.end());
    seen.insert(b.begin(), b.end());
    if (seen.size() != a.size() + b.size())
        throw ParamError("construct: Cauchy elements a and b must be jointly distinct");

    CauchyMatrix c;
    c.rows = static_cast<int>(a.size());
    c.cols = static_cast<int>(b.size());
    c.a = std::move(a);
    c.b = std::move(b);
    c.entries.resize(static_cast<std::size_t>(c.rows) * static_cast<std::size_t>(c.cols));
    for (int r = 0; r < c.rows; ++r)
        for (int j = 0; j < c.cols; ++j)
            c.entries[static_cast<std::size_t>(r * c.cols + j)] =
                f.inv(Field::add(c.a[static_cast<std::size_t>(r)],
                                 c.b[static_cast<std::size_t>(j)]));
    return c;
}

CauchyMatrix build_cauchy(const CodeParams& p, const Field& f) {
    const std::uint32_t needed = 2u * static_cast<std::uint32_t>(p.n) -
                                 static_cast<std::uint32_t>(p.k);
    if (f.order() < needed)
        throw FieldError("construct: field has " + std::to_string(f.order()) +
                         " elements but the Cauchy matrix needs " +
                         std::to_string(needed) + "; use a 16-bit field");
    std::vector<gf_elem> a(static_cast<std::size_t>(p.n - p.k));
    std::vector<gf_elem> b(static_cast<std::size_t>(p.n));
    for (int r = 0; r < p.n - p.k; ++r)
        a[static_cast<std::size_t>(r)] = static_cast<gf_elem>(r);
    for (int j = 0; j < p.n; ++j)
        b[static_cast<std::size_t>(j)] = static_cast<gf_elem>(p.n - p.k + j);
    return CauchyMatrix::from_elements(std::move(a), std::move(b), f);
}

namespace {

std::uint32_t column_of(int node, std::uint32_t tuple, const CodeParams& p) {
    return static_cast<std::uint32_t>(node - 1) * p.alpha + tuple;
}

} // namespace

SparseRow type1_row(const CauchyMatrix& cauchy, const CodeParams& p, int r,
                    std::span<const int> x) {
    if (r < 1 || r > p.n - p.d)
        throw ParamError("construct: anchor constraint index out of [1,n-d]");
    const std::uint32_t xi = tuple_index(x, p);
    SparseRow row;
    row.reserve(static_cast<std::size_t>(p.n));
    for (int j = 1; j <= p.n; ++j)
        row.push_back({column_of(j, xi, p), cauchy.at(r, j)});
    return row;
}

SparseRow type2_row(const CauchyMatrix& cauchy, const CodeParams& p, gf_elem rho,
                    int delta, std::span<const int> x) {
    if (delta < 1 || delta > p.q - 1)
        throw ParamError("construct: shift delta out of [1,q-1]");
    const std::uint32_t xi = tuple_index(x, p);
    SparseRow row;
    row.reserve(static_cast<std::size_t>(p.n + p.m));
    for (int j = 1; j <= p.n; ++j)
        row.push_back({column_of(j, xi, p), cauchy.at(p.n - p.d + delta, j)});
    for (int g = 1; g <= p.m; ++g) {
        const NodeId node{g, x[static_cast<std::size_t>(g - 1)]};
        if (!node_exists(node, p))
            continue;  // partial last group: the term vanishes
        const std::uint32_t shifted = tuple_index(shift_tuple(x, g, delta, p), p);
        row.push_back({column_of(node_index(node, p), shifted, p), rho});
    }
    std::sort(row.begin(), row.end(),
              [](const SparseEntry& l, const SparseEntry& r) { return l.col < r.col; });
    return row;
}

ParityCheck::ParityCheck(CodeParams params, Field field, CauchyMatrix cauchy,
                         gf_elem rho)
    : params_(std::move(params)), field_(std::move(field)),
      cauchy_(std::move(cauchy)), rho_(rho) {
    if (rho_ == 0)
        throw ParamError("construct: rho must be nonzero");
    if (rho_ >= field_.order())
        throw ParamError("construct: rho is not a field element");
    if (cauchy_.rows != params_.n - params_.k || cauchy_.cols != params_.n)
        throw ParamError("construct: Cauchy matrix shape does not match the code");

    const std::size_t rows =
        static_cast<std::size_t>(params_.n - params_.k) * params_.alpha;
    offsets_.reserve(rows + 1);
    offsets_.push_back(0);
    entries_.reserve(rows * static_cast<std::size_t>(params_.n + params_.m));

    std::vector<std::vector<int>> tuples(params_.alpha);
    for (std::uint32_t xi = 0; xi < params_.alpha; ++xi)
        tuples[xi] = tuple_at(xi, params_);

    for (int r = 1; r <= params_.n - params_.d; ++r)
        for (std::uint32_t xi = 0; xi < params_.alpha; ++xi) {
            SparseRow row = type1_row(cauchy_, params_, r, tuples[xi]);
            entries_.insert(entries_.end(), row.begin(), row.end());
            offsets_.push_back(entries_.size());
        }
    for (int delta = 1; delta <= params_.q - 1; ++delta)
        for (std::uint32_t xi = 0; xi < params_.alpha; ++xi) {
            SparseRow row = type2_row(cauchy_, params_, rho_, delta, tuples[xi]);
            entries_.insert(entries_.end(), row.begin(), row.end());
            offsets_.push_back(entries_.size());
        }
}

Matrix ParityCheck::submatrix(std::span<const int> nodes) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < 1 || nodes[i] > params_.n)
            throw ParamError("construct: submatrix node index out of range");
        if (i > 0 && nodes[i] <= nodes[i - 1])
            throw ParamError("construct: submatrix nodes must be strictly ascending");
    }
    // Map node -> position in the selection, or -1.
    std::vector<int> slot(static_cast<std::size_t>(params_.n) + 1, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        slot[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);

    Matrix out(row_count(), nodes.size() * params_.alpha);
    for (std::size_t r = 0; r < row_count(); ++r)
        for (const SparseEntry& e : row(r)) {
            const int node = static_cast<int>(e.col / params_.alpha) + 1;
            const int pos = slot[static_cast<std::size_t>(node)];
            if (pos < 0)
                continue;
            out.at(r, static_cast<std::size_t>(pos) * params_.alpha +
                          e.col % params_.alpha) = e.coeff;
        }
    return out;
}

ParityCheck ParityCheck::without_shift_entries() const {
    ParityCheck stripped;
    stripped.params_ = params_;
    stripped.field_ = field_;
    stripped.cauchy_ = cauchy_;
    stripped.rho_ = rho_;
    stripped.offsets_.push_back(0);
    for (std::size_t r = 0; r < row_count(); ++r) {
        const std::uint32_t xi =
            static_cast<std::uint32_t>(r % params_.alpha);
        for (const SparseEntry& e : row(r))
            if (e.col % params_.alpha == xi)
                stripped.entries_.push_back(e);
        stripped.offsets_.push_back(stripped.entries_.size());
    }
    return stripped;
}

ParityCheck build_parity_check(const CodeParams& p, const Field& f, gf_elem rho) {
    return ParityCheck(p, f, build_cauchy(p, f), rho);
}

ParityCheck build_parity_check(const CodeParams& p, const Field& f,
                               const CauchyMatrix& cauchy, gf_elem rho) {
    return ParityCheck(p, f, cauchy, rho);
}

} // namespace msr
