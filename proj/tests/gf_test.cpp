#include <doctest.h>

#include <random>

#include "msrcode/gf.hpp"

using msr::Field;
using msr::gf_elem;

namespace {

// Independent shift-and-reduce product used as the oracle for the table
// implementation.
gf_elem ref_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly,
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
    return static_cast<gf_elem>(r);
}

} // namespace

TEST_CASE("addition is characteristic-2 xor") {
    CHECK(Field::add(0x03, 0x03) == 0x00);
    CHECK(Field::add(0x57, 0x83) == 0xD4);
    for (std::uint32_t x = 0; x < 256; ++x) {
        CHECK(Field::add(static_cast<gf_elem>(x), 0) == x);
        for (std::uint32_t y = 0; y < 256; y += 37) {
            const gf_elem a = static_cast<gf_elem>(x), b = static_cast<gf_elem>(y);
            CHECK(Field::add(Field::add(a, b), b) == a);  // involution
        }
    }
}

TEST_CASE("width-8 multiplication matches the reference on every pair") {
    const Field& f = Field::gf256();
    for (std::uint32_t a = 0; a < 256; ++a)
        for (std::uint32_t b = 0; b < 256; ++b)
            CHECK(f.mul(static_cast<gf_elem>(a), static_cast<gf_elem>(b)) ==
                  ref_mul(a, b, 0x11B, 256));
}

TEST_CASE("multiplication identities") {
    const Field& f = Field::gf256();
    for (std::uint32_t x = 0; x < 256; ++x) {
        CHECK(f.mul(static_cast<gf_elem>(x), 1) == x);
        CHECK(f.mul(static_cast<gf_elem>(x), 0) == 0);
    }
}

TEST_CASE("inverse of 0x02 is 0x8D under 0x11B") {
    const Field& f = Field::gf256();
    // Exhaustive oracle: the unique v with 2*v == 1.
    gf_elem found = 0;
    int matches = 0;
    for (std::uint32_t v = 1; v < 256; ++v)
        if (ref_mul(2, v, 0x11B, 256) == 1) {
            found = static_cast<gf_elem>(v);
            ++matches;
        }
    CHECK(matches == 1);
    CHECK(found == 0x8D);
    CHECK(f.mul(0x02, 0x8D) == 0x01);
    CHECK(f.inv(0x8D) == 0x02);
    CHECK(f.inv(0x02) == 0x8D);
}

TEST_CASE("width-8 inverse postcondition, exhaustive") {
    const Field& f = Field::gf256();
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), msr::FieldError);
    for (std::uint32_t a = 1; a < 256; ++a)
        CHECK(f.mul(static_cast<gf_elem>(a), f.inv(static_cast<gf_elem>(a))) == 1);
}

TEST_CASE("width-8 field laws, exhaustive") {
    const Field& f = Field::gf256();
    std::uint64_t violations = 0;
    for (std::uint32_t a = 0; a < 256; ++a)
        for (std::uint32_t b = 0; b < 256; ++b) {
            const gf_elem ea = static_cast<gf_elem>(a), eb = static_cast<gf_elem>(b);
            violations += f.mul(ea, eb) != f.mul(eb, ea);
            violations += Field::add(ea, eb) != Field::add(eb, ea);
        }
    CHECK(violations == 0);
    // All 2^24 triples; tallied so the loop stays fast.
    for (std::uint32_t a = 0; a < 256; ++a)
        for (std::uint32_t b = 0; b < 256; ++b)
            for (std::uint32_t c = 0; c < 256; ++c) {
                const gf_elem ea = static_cast<gf_elem>(a),
                              eb = static_cast<gf_elem>(b),
                              ec = static_cast<gf_elem>(c);
                violations += f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec));
                violations += f.mul(ea, Field::add(eb, ec)) !=
                              Field::add(f.mul(ea, eb), f.mul(ea, ec));
                violations += Field::add(Field::add(ea, eb), ec) !=
                              Field::add(ea, Field::add(eb, ec));
            }
    CHECK(violations == 0);
}

TEST_CASE("width-16 laws on 100000 seeded triples") {
    const Field& f = Field::gf65536();
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 100000; ++i) {
        const gf_elem a = static_cast<gf_elem>(rng() & 0xFFFF);
        const gf_elem b = static_cast<gf_elem>(rng() & 0xFFFF);
        const gf_elem c = static_cast<gf_elem>(rng() & 0xFFFF);
        REQUIRE(f.mul(a, b) == ref_mul(a, b, 0x1100B, 65536));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.mul(a, Field::add(b, c)) ==
                Field::add(f.mul(a, b), f.mul(a, c)));
        if (a != 0)
            REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("reduction polynomial validation") {
    CHECK_NOTHROW(Field(8, 0x11B));
    CHECK_NOTHROW(Field(16, 0x1100B));
    // x^8+x^4+x^3+1 has 1 as a root, hence a factor of x+1.
    CHECK_THROWS_AS(Field(8, 0x119), msr::FieldError);
    // x^8 alone is divisible by x.
    CHECK_THROWS_AS(Field(8, 0x100), msr::FieldError);
    // Wrong degree for the width.
    CHECK_THROWS_AS(Field(8, 0x1B), msr::FieldError);
    CHECK_THROWS_AS(Field(8, 0x211B), msr::FieldError);
    // Unsupported widths.
    CHECK_THROWS_AS(Field(12, 0x1053), msr::FieldError);
    // Width-16 polynomials outside the accepted table.
    CHECK_THROWS_AS(Field(16, 0x10001), msr::FieldError);
}

TEST_CASE("symbols serialize little-endian") {
    std::uint8_t buf[2] = {0, 0};
    msr::store_symbol_le(buf, 0xAB, 8);
    CHECK(buf[0] == 0xAB);
    CHECK(msr::load_symbol_le(buf, 8) == 0xAB);
    msr::store_symbol_le(buf, 0x12FE, 16);
    CHECK(buf[0] == 0xFE);
    CHECK(buf[1] == 0x12);
    CHECK(msr::load_symbol_le(buf, 16) == 0x12FE);
}
