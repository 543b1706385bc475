#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "msrcode/codec.hpp"
#include "msrcode/mds.hpp"

using msr::build_parity_check;
using msr::Codeword;
using msr::CodeParams;
using msr::derive_params;
using msr::encode;
using msr::Field;
using msr::gf_elem;
using msr::Matrix;
using msr::ParityCheck;
using msr::reconstruct;

namespace {

ParityCheck certified_pc(int n, int k, int d) {
    const CodeParams p = derive_params(n, k, d);
    const Field& f = Field::gf256();
    return build_parity_check(p, f, msr::find_rho(p, f).rho);
}

std::vector<gf_elem> random_message(const CodeParams& p, std::mt19937_64& rng,
                                    std::uint32_t order) {
    std::vector<gf_elem> m(static_cast<std::size_t>(p.k) * p.alpha);
    for (auto& s : m)
        s = static_cast<gf_elem>(rng() % order);
    return m;
}

// Reference solver written from scratch: plain Gauss-Jordan on the
// augmented dense system, no shared code with the library path.
std::vector<gf_elem> reference_solve(Matrix a, std::vector<gf_elem> b,
                                     const Field& f) {
    const std::size_t n = a.rows();
    REQUIRE(a.cols() == n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0)
            ++pivot;
        REQUIRE(pivot < n);
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a.at(col, c), a.at(pivot, c));
        std::swap(b[col], b[pivot]);
        const gf_elem ip = f.inv(a.at(col, col));
        for (std::size_t c = 0; c < n; ++c)
            a.at(col, c) = f.mul(a.at(col, c), ip);
        b[col] = f.mul(b[col], ip);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0)
                continue;
            const gf_elem factor = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c)
                a.at(r, c) = Field::add(a.at(r, c), f.mul(factor, a.at(col, c)));
            b[r] = Field::add(b[r], f.mul(factor, b[col]));
        }
    }
    return b;
}

} // namespace

TEST_CASE("zero message encodes to the zero codeword") {
    const ParityCheck pc = certified_pc(4, 2, 3);
    const std::vector<gf_elem> zero(static_cast<std::size_t>(2) * 4, 0);
    const Codeword c = encode(zero, pc);
    for (gf_elem s : c.symbols)
        CHECK(s == 0);
}

TEST_CASE("encoding is linear and systematic") {
    const ParityCheck pc = certified_pc(5, 2, 3);
    const CodeParams& p = pc.params();
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m1 = random_message(p, rng, 256);
        const auto m2 = random_message(p, rng, 256);
        std::vector<gf_elem> sum(m1.size());
        for (std::size_t i = 0; i < m1.size(); ++i)
            sum[i] = Field::add(m1[i], m2[i]);

        const Codeword c1 = encode(m1, pc);
        const Codeword c2 = encode(m2, pc);
        const Codeword cs = encode(sum, pc);
        for (std::size_t i = 0; i < cs.symbols.size(); ++i)
            CHECK(cs.symbols[i] == Field::add(c1.symbols[i], c2.symbols[i]));

        // systematic prefix
        for (std::size_t i = 0; i < m1.size(); ++i)
            CHECK(c1.symbols[i] == m1[i]);
    }
}

TEST_CASE("parity blocks match an independent dense solve") {
    const ParityCheck pc = certified_pc(4, 2, 3);
    const CodeParams& p = pc.params();
    const Field& f = pc.field();
    std::mt19937_64 rng(777);
    const auto msg = random_message(p, rng, 256);
    const Codeword c = encode(msg, pc);

    // H(:,P) y = H(:,K) msg solved from scratch
    const Matrix hp = pc.submatrix(std::vector<int>{3, 4});
    const Matrix hk = pc.submatrix(std::vector<int>{1, 2});
    std::vector<gf_elem> rhs(pc.row_count(), 0);
    for (std::size_t r = 0; r < hk.rows(); ++r) {
        gf_elem acc = 0;
        for (std::size_t i = 0; i < hk.cols(); ++i)
            acc = Field::add(acc, f.mul(hk.at(r, i), msg[i]));
        rhs[r] = acc;
    }
    const std::vector<gf_elem> parity = reference_solve(hp, rhs, f);
    for (std::size_t i = 0; i < parity.size(); ++i)
        CHECK(parity[i] == c.symbols[msg.size() + i]);
}

TEST_CASE("round trip from parity nodes {3,4} at (4,2,3)") {
    const ParityCheck pc = certified_pc(4, 2, 3);
    std::mt19937_64 rng(2024);
    const auto msg = random_message(pc.params(), rng, 256);
    const Codeword c = encode(msg, pc);

    std::map<int, std::vector<gf_elem>> available;
    available[3] = {c.block(3).begin(), c.block(3).end()};
    available[4] = {c.block(4).begin(), c.block(4).end()};
    const Codeword rebuilt = reconstruct(available, pc);
    CHECK(rebuilt == c);
}

TEST_CASE("every k-subset reconstructs the identical codeword at (5,2,3)") {
    const ParityCheck pc = certified_pc(5, 2, 3);
    std::mt19937_64 rng(31);
    const auto msg = random_message(pc.params(), rng, 256);
    const Codeword c = encode(msg, pc);

    int subsets = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            std::map<int, std::vector<gf_elem>> available;
            available[i] = {c.block(i).begin(), c.block(i).end()};
            available[j] = {c.block(j).begin(), c.block(j).end()};
            CHECK(reconstruct(available, pc) == c);
            ++subsets;
        }
    CHECK(subsets == 10);
}

TEST_CASE("reconstruction edge cases") {
    const ParityCheck pc = certified_pc(4, 2, 3);
    std::mt19937_64 rng(5);
    const auto msg = random_message(pc.params(), rng, 256);
    const Codeword c = encode(msg, pc);

    // all nodes available: identity
    std::map<int, std::vector<gf_elem>> all;
    for (int j = 1; j <= 4; ++j)
        all[j] = {c.block(j).begin(), c.block(j).end()};
    CHECK(reconstruct(all, pc) == c);

    // k-1 nodes: insufficient
    std::map<int, std::vector<gf_elem>> one;
    one[2] = {c.block(2).begin(), c.block(2).end()};
    CHECK_THROWS_AS(reconstruct(one, pc), msr::DataError);

    // k+1 nodes with one corrupted block: inconsistent, caught
    std::map<int, std::vector<gf_elem>> corrupt;
    for (int j = 1; j <= 3; ++j)
        corrupt[j] = {c.block(j).begin(), c.block(j).end()};
    corrupt[2][1] = Field::add(corrupt[2][1], 9);
    CHECK_THROWS_AS(reconstruct(corrupt, pc), msr::DataError);

    // wrong block size
    std::map<int, std::vector<gf_elem>> short_block;
    short_block[1] = {1, 2};
    short_block[2] = {c.block(2).begin(), c.block(2).end()};
    CHECK_THROWS_AS(reconstruct(short_block, pc), msr::DataError);
}

TEST_CASE("parity residual") {
    const ParityCheck pc = certified_pc(5, 2, 3);
    std::mt19937_64 rng(77);
    const auto msg = random_message(pc.params(), rng, 256);
    const Codeword c = encode(msg, pc);

    for (gf_elem r : msr::parity_residual(c, pc))
        CHECK(r == 0);

    Codeword zero = c;
    std::fill(zero.symbols.begin(), zero.symbols.end(), 0);
    for (gf_elem r : msr::parity_residual(zero, pc))
        CHECK(r == 0);

    // flipping any single symbol leaves a nonzero residual
    for (std::size_t i = 0; i < c.symbols.size(); ++i) {
        Codeword flipped = c;
        flipped.symbols[i] = Field::add(flipped.symbols[i], 1);
        bool nonzero = false;
        for (gf_elem r : msr::parity_residual(flipped, pc))
            nonzero = nonzero || r != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("solution space has dimension k*alpha") {
    for (const auto& [n, k, d] :
         std::vector<std::array<int, 3>>{{4, 2, 3}, {5, 2, 3}, {6, 3, 4}}) {
        const ParityCheck pc = certified_pc(n, k, d);
        std::vector<int> all_nodes;
        for (int j = 1; j <= n; ++j)
            all_nodes.push_back(j);
        const std::size_t rank = msr::gf_rank(pc.submatrix(all_nodes), pc.field());
        CHECK(rank == pc.row_count());  // full row rank => nullity k*alpha
    }
}
