#include "msrcode/codec.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace msr {

namespace {

std::vector<int> complement_nodes(std::span<const int> nodes, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int j : nodes)
        in[static_cast<std::size_t>(j)] = true;
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
        if (!in[static_cast<std::size_t>(j)])
            out.push_back(j);
    return out;
}

std::vector<gf_elem> sparse_residual(std::span<const gf_elem> symbols,
                                     const ParityCheck& pc) {
    const Field& f = pc.field();
    std::vector<gf_elem> r(pc.row_count(), 0);
    for (std::size_t i = 0; i < pc.row_count(); ++i) {
        gf_elem acc = 0;
        for (const SparseEntry& e : pc.row(i))
            acc = Field::add(acc, f.mul(e.coeff, symbols[e.col]));
        r[i] = acc;
    }
    return r;
}

} // namespace

SystematicEncoder::SystematicEncoder(const ParityCheck& pc)
    : n_(pc.params().n), k_(pc.params().k), alpha_(pc.params().alpha),
      message_symbols_(static_cast<std::size_t>(k_) * alpha_), field_(pc.field()) {
    std::vector<int> data_nodes(static_cast<std::size_t>(k_));
    std::iota(data_nodes.begin(), data_nodes.end(), 1);
    std::vector<int> parity_nodes(static_cast<std::size_t>(n_ - k_));
    std::iota(parity_nodes.begin(), parity_nodes.end(), k_ + 1);

    const LinearSystem parity_system(pc.submatrix(parity_nodes), field_);
    if (!parity_system.full_column_rank())
        throw InternalError(
            "codec: parity columns are singular; the parity-check matrix is not MDS");
    // Characteristic 2: H(:,P)^-1 H(:,K) needs no sign flip.
    parity_map_ =
        mat_mul(parity_system.transform(), pc.submatrix(data_nodes), field_);
}

Codeword SystematicEncoder::encode(std::span<const gf_elem> message) const {
    Codeword c;
    c.n = n_;
    c.alpha = alpha_;
    c.symbols.assign(static_cast<std::size_t>(n_) * alpha_, 0);
    encode_into(message, c.symbols);
    return c;
}

void SystematicEncoder::encode_into(std::span<const gf_elem> message,
                                    std::span<gf_elem> out) const {
    if (message.size() != message_symbols_)
        throw ParamError("codec: message must have k*alpha symbols");
    std::copy(message.begin(), message.end(), out.begin());
    const std::vector<gf_elem> parity = mat_vec(parity_map_, message, field_);
    std::copy(parity.begin(), parity.end(), out.begin() + static_cast<std::ptrdiff_t>(message_symbols_));
}

Codeword encode(std::span<const gf_elem> message, const ParityCheck& pc) {
    return SystematicEncoder(pc).encode(message);
}

ErasureSolver::ErasureSolver(const ParityCheck& pc, std::vector<int> missing_nodes)
    : pc_(pc), missing_(std::move(missing_nodes)),
      system_(pc.submatrix(missing_), pc.field()) {
    if (missing_.size() > static_cast<std::size_t>(pc.params().n - pc.params().k))
        throw DataError("codec: fewer than k node blocks available");
    if (!system_.full_column_rank())
        throw InternalError(
            "codec: erasure columns are rank-deficient; the parity-check matrix is not MDS");
}

void ErasureSolver::complete(std::span<gf_elem> symbols) const {
    const std::uint32_t alpha = pc_.params().alpha;
    const std::vector<gf_elem> residual = sparse_residual(symbols, pc_);
    const std::vector<gf_elem> solved = system_.solve(residual);
    for (std::size_t i = 0; i < missing_.size(); ++i)
        std::copy(solved.begin() + static_cast<std::ptrdiff_t>(i * alpha),
                  solved.begin() + static_cast<std::ptrdiff_t>((i + 1) * alpha),
                  symbols.begin() +
                      static_cast<std::ptrdiff_t>(missing_[i] - 1) * alpha);
}

Codeword reconstruct(const std::map<int, std::vector<gf_elem>>& available,
                     const ParityCheck& pc) {
    const CodeParams& p = pc.params();
    if (static_cast<int>(available.size()) < p.k)
        throw DataError("codec: reconstruction needs at least k node blocks, got " +
                        std::to_string(available.size()));

    Codeword c;
    c.n = p.n;
    c.alpha = p.alpha;
    c.symbols.assign(static_cast<std::size_t>(p.n) * p.alpha, 0);
    std::vector<int> have;
    for (const auto& [node, block] : available) {
        if (node < 1 || node > p.n)
            throw ParamError("codec: node index out of range");
        if (block.size() != p.alpha)
            throw DataError("codec: node block must have alpha symbols");
        std::copy(block.begin(), block.end(),
                  c.symbols.begin() + static_cast<std::ptrdiff_t>(node - 1) * p.alpha);
        have.push_back(node);
    }
    const ErasureSolver solver(pc, complement_nodes(have, p.n));
    solver.complete(c.symbols);
    return c;
}

std::vector<gf_elem> parity_residual(const Codeword& c, const ParityCheck& pc) {
    return sparse_residual(c.symbols, pc);
}

} // namespace msr
