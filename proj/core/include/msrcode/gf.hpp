#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "msrcode/errors.hpp"

namespace msr {

// Element of a binary extension field F_Q, Q = 2^8 or 2^16.
// Stored as its canonical integer value in [0, Q-1]; the low byte is the
// whole element for width 8.
using gf_elem = std::uint16_t;

/// Arithmetic in F_Q with Q = 2^width_bits, width_bits in {8, 16}.
///
/// Addition is XOR (characteristic 2). Multiplication and inversion go
/// through log/antilog tables built once at construction from a generator
/// found by search. Copies share the tables, so Field has cheap value
/// semantics; all operations are pure and thread-safe.
class Field {
public:
    Field(unsigned width_bits, std::uint32_t reduction_poly);

    /// F_256 with the reduction polynomial 0x11B.
    static const Field& gf256();
    /// F_65536 with the reduction polynomial 0x1100B.
    static const Field& gf65536();

    unsigned width_bits() const { return width_bits_; }
    std::uint32_t reduction_poly() const { return poly_; }
    std::uint32_t order() const { return order_; }            // Q
    unsigned symbol_bytes() const { return width_bits_ / 8; }

    static gf_elem add(gf_elem a, gf_elem b) { return a ^ b; }

    gf_elem mul(gf_elem a, gf_elem b) const {
        if (a == 0 || b == 0)
            return 0;
        return tables_->exp[tables_->log[a] + tables_->log[b]];
    }

    /// Multiplicative inverse. Throws FieldError for 0.
    gf_elem inv(gf_elem a) const {
        if (a == 0)
            throw FieldError("gf: inverse of zero");
        return tables_->exp[order_ - 1 - tables_->log[a]];
    }

    gf_elem div(gf_elem a, gf_elem b) const { return mul(a, inv(b)); }

    bool operator==(const Field& other) const {
        return width_bits_ == other.width_bits_ && poly_ == other.poly_;
    }

private:
    struct Tables {
        std::vector<std::uint32_t> log;  // index by element, valid for nonzero
        std::vector<gf_elem> exp;        // doubled so log sums need no reduction
    };

    unsigned width_bits_;
    std::uint32_t poly_;
    std::uint32_t order_;
    std::shared_ptr<const Tables> tables_;
};

/// Store a symbol little-endian into width_bits/8 bytes.
void store_symbol_le(std::uint8_t* out, gf_elem v, unsigned width_bits);
/// Load a little-endian symbol of width_bits/8 bytes.
gf_elem load_symbol_le(const std::uint8_t* in, unsigned width_bits);

} // namespace msr
