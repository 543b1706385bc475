#pragma once

#include <map>
#include <span>
#include <vector>

#include "msrcode/construct.hpp"
#include "msrcode/linalg.hpp"

namespace msr {

/// One stripe's worth of encoded data: n node blocks of alpha symbols,
/// stored flat node-major so that the flat position of (node, tuple)
/// equals its parity-check column.
struct Codeword {
    int n = 0;
    std::uint32_t alpha = 0;
    std::vector<gf_elem> symbols;  // n * alpha

    gf_elem at(int node, std::uint32_t tuple) const {
        return symbols[static_cast<std::size_t>(node - 1) * alpha + tuple];
    }
    gf_elem& at(int node, std::uint32_t tuple) {
        return symbols[static_cast<std::size_t>(node - 1) * alpha + tuple];
    }
    std::span<const gf_elem> block(int node) const {
        return {symbols.data() + static_cast<std::size_t>(node - 1) * alpha, alpha};
    }

    bool operator==(const Codeword&) const = default;
};

/// Systematic encoder: blocks 1..k hold the message verbatim, parity
/// blocks are the unique completion satisfying every parity constraint.
/// The parity map is solved once at construction so per-stripe encoding is
/// a dense mat-vec.
class SystematicEncoder {
public:
    explicit SystematicEncoder(const ParityCheck& pc);

    std::size_t message_symbols() const { return message_symbols_; }

    Codeword encode(std::span<const gf_elem> message) const;
    /// Writes all n*alpha symbols of the stripe into out.
    void encode_into(std::span<const gf_elem> message, std::span<gf_elem> out) const;

private:
    int n_;
    int k_;
    std::uint32_t alpha_;
    std::size_t message_symbols_;
    Matrix parity_map_;  // (n-k)alpha x k*alpha
    Field field_;
};

Codeword encode(std::span<const gf_elem> message, const ParityCheck& pc);

/// Fills in missing node blocks from the blocks of the available nodes,
/// for a fixed missing set. Construction reduces the restricted system
/// once; completing a stripe is then cheap. Extra constraints beyond the
/// missing unknowns double as a corruption check.
class ErasureSolver {
public:
    ErasureSolver(const ParityCheck& pc, std::vector<int> missing_nodes);

    const std::vector<int>& missing() const { return missing_; }

    /// symbols is a full flat codeword with the missing blocks zeroed;
    /// they are filled in place. Throws DataError when the available
    /// blocks are inconsistent with every codeword.
    void complete(std::span<gf_elem> symbols) const;

private:
    const ParityCheck& pc_;
    std::vector<int> missing_;
    LinearSystem system_;
};

/// Recover the full codeword from any >= k node blocks.
Codeword reconstruct(const std::map<int, std::vector<gf_elem>>& available,
                     const ParityCheck& pc);

/// H * c; the zero vector exactly when c is a codeword.
std::vector<gf_elem> parity_residual(const Codeword& c, const ParityCheck& pc);

} // namespace msr
