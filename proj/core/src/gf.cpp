#include "msrcode/gf.hpp"

#include <array>

namespace msr {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of GF(2)[x] division.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a))
        a ^= b << (da - db);
    return a;
}

// Trial division by every polynomial of degree 1..deg/2. Exhaustive and
// cheap for degree 8 (31 candidate divisors).
bool poly_irreducible(std::uint32_t p, unsigned deg) {
    for (unsigned dd = 1; dd <= deg / 2; ++dd) {
        for (std::uint32_t div = 1u << dd; div < (2u << dd); ++div) {
            if (poly_mod(p, div) == 0)
                return false;
        }
    }
    return true;
}

// Shift-and-reduce product; only used to build the tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly,
                       std::uint32_t order) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & order)
            a ^= poly;
    }
    return r;
}

// Degree-16 polynomials are not factor-checked; accept known-good constants.
constexpr std::array<std::uint32_t, 1> kAcceptedWidth16Polys = {0x1100B};

} // namespace

Field::Field(unsigned width_bits, std::uint32_t reduction_poly)
    : width_bits_(width_bits), poly_(reduction_poly) {
    if (width_bits != 8 && width_bits != 16)
        throw FieldError("gf: field width must be 8 or 16 bits");
    order_ = 1u << width_bits;
    if (reduction_poly < order_ || reduction_poly >= 2 * order_)
        throw FieldError("gf: reduction polynomial must have degree equal to the field width");
    if (width_bits == 8) {
        if (!poly_irreducible(reduction_poly, 8))
            throw FieldError("gf: reduction polynomial is reducible");
    } else {
        bool known = false;
        for (auto p : kAcceptedWidth16Polys)
            known = known || p == reduction_poly;
        if (!known)
            throw FieldError("gf: width-16 polynomial not in the accepted table (use 0x1100B)");
    }

    auto tables = std::make_shared<Tables>();
    tables->log.assign(order_, 0);
    tables->exp.assign(2 * (order_ - 1), 0);

    // The reduction polynomial need not be primitive (0x11B is not), so
    // search for a generator whose powers reach every nonzero element.
    for (std::uint32_t g = 2; g < order_; ++g) {
        std::uint32_t x = 1;
        std::uint32_t i = 0;
        for (; i < order_ - 1; ++i) {
            if (x == 1 && i != 0)
                break;
            tables->exp[i] = static_cast<gf_elem>(x);
            tables->log[x] = i;
            x = slow_mul(x, g, poly_, order_);
        }
        if (i == order_ - 1 && x == 1) {
            for (std::uint32_t j = 0; j < order_ - 1; ++j)
                tables->exp[order_ - 1 + j] = tables->exp[j];
            tables_ = std::move(tables);
            return;
        }
    }
    throw FieldError("gf: no generator found (polynomial is not irreducible?)");
}

const Field& Field::gf256() {
    static const Field f(8, 0x11B);
    return f;
}

const Field& Field::gf65536() {
    static const Field f(16, 0x1100B);
    return f;
}

void store_symbol_le(std::uint8_t* out, gf_elem v, unsigned width_bits) {
    out[0] = static_cast<std::uint8_t>(v & 0xFF);
    if (width_bits == 16)
        out[1] = static_cast<std::uint8_t>(v >> 8);
}

gf_elem load_symbol_le(const std::uint8_t* in, unsigned width_bits) {
    gf_elem v = in[0];
    if (width_bits == 16)
        v = static_cast<gf_elem>(v | (static_cast<gf_elem>(in[1]) << 8));
    return v;
}

} // namespace msr
