#include <doctest.h>

#include <set>
#include <vector>

#include "msrcode/params.hpp"

using msr::CodeParams;
using msr::derive_params;
using msr::NodeId;

namespace {

const std::vector<std::array<int, 3>> kDeskParams = {
    {4, 2, 3}, {5, 2, 3}, {5, 3, 4}, {6, 3, 4},
    {6, 4, 5}, {7, 4, 5}, {9, 4, 6}, {4, 2, 2},
};

} // namespace

TEST_CASE("derivation examples") {
    CodeParams p = derive_params(4, 2, 3);
    CHECK(p.q == 2);
    CHECK(p.t == 3);
    CHECK(p.s == 0);
    CHECK(p.m == 2);
    CHECK(p.alpha == 4);
    CHECK(p.beta == 2);

    p = derive_params(5, 2, 3);
    CHECK(p.q == 2);
    CHECK(p.t == 3);
    CHECK(p.s == 1);
    CHECK(p.m == 3);
    CHECK(p.alpha == 8);
    CHECK(p.beta == 4);

    p = derive_params(9, 4, 6);
    CHECK(p.q == 3);
    CHECK(p.t == 4);
    CHECK(p.s == 0);
    CHECK(p.m == 3);
    CHECK(p.alpha == 27);
    CHECK(p.beta == 9);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(derive_params(5, 3, 2), msr::ParamError);   // d < k
    CHECK_THROWS_AS(derive_params(4, 2, 4), msr::ParamError);   // d >= n
    CHECK_THROWS_AS(derive_params(4, 0, 3), msr::ParamError);   // k < 1
    CHECK_THROWS_AS(derive_params(3, 2, 5), msr::ParamError);
}

TEST_CASE("recomposition identity holds for every accepted triple") {
    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k < n; ++k)
            for (int d = k; d <= n - 1; ++d) {
                const CodeParams p = derive_params(n, k, d);
                CHECK((p.t - 1) * p.q + p.s == n);
                CHECK(p.t >= 2);
                CHECK(p.s >= 0);
                CHECK(p.s <= p.q - 1);
                CHECK(p.beta * static_cast<std::uint32_t>(p.q) == p.alpha);
            }
}

TEST_CASE("degenerate d == k collapses to a scalar code") {
    const CodeParams p = derive_params(4, 2, 2);
    CHECK(p.q == 1);
    CHECK(p.s == 0);
    CHECK(p.alpha == 1);
    CHECK(p.beta == 1);
    CHECK(p.degenerate());
    CHECK_FALSE(derive_params(4, 2, 3).degenerate());
}

TEST_CASE("node index formula and examples") {
    const CodeParams p = derive_params(5, 2, 3);  // q=2, m=3, last group holds 1
    CHECK(msr::node_index({1, 0}, p) == 1);
    CHECK(msr::node_index({2, 1}, p) == 4);
    CHECK(msr::node_index({p.m, p.s - 1}, p) == p.n);  // last node
    CHECK_FALSE(msr::node_exists({3, 1}, p));          // partial group
    CHECK_THROWS_AS(msr::node_index({3, 1}, p), msr::ParamError);
    CHECK_THROWS_AS(msr::node_index({0, 0}, p), msr::ParamError);
    CHECK_THROWS_AS(msr::node_at(0, p), msr::ParamError);
    CHECK_THROWS_AS(msr::node_at(6, p), msr::ParamError);
}

TEST_CASE("node indexing is a bijection onto [1,n]") {
    for (const auto& [n, k, d] : kDeskParams) {
        const CodeParams p = derive_params(n, k, d);
        std::set<int> seen;
        for (int g = 1; g <= p.m; ++g)
            for (int theta = 0; theta < p.group_size(g); ++theta) {
                const int idx = msr::node_index({g, theta}, p);
                CHECK(idx >= 1);
                CHECK(idx <= p.n);
                CHECK(seen.insert(idx).second);
                const NodeId back = msr::node_at(idx, p);
                CHECK(back == NodeId{g, theta});
            }
        CHECK(static_cast<int>(seen.size()) == p.n);
    }
}

TEST_CASE("tuple indexing examples and bijection") {
    const CodeParams p = derive_params(4, 2, 3);  // q=2, m=2
    CHECK(msr::tuple_index(std::vector<int>{0, 0}, p) == 0);
    CHECK(msr::tuple_index(std::vector<int>{1, 1}, p) == p.alpha - 1);
    CHECK(msr::tuple_index(std::vector<int>{1, 0}, p) == 2);

    for (const auto& [n, k, d] : kDeskParams) {
        const CodeParams pp = derive_params(n, k, d);
        std::set<std::uint32_t> seen;
        std::vector<int> coords(static_cast<std::size_t>(pp.m), 0);
        // Odometer sweep over all alpha tuples.
        bool done = false;
        while (!done) {
            const std::uint32_t idx = msr::tuple_index(coords, pp);
            CHECK(idx < pp.alpha);
            CHECK(seen.insert(idx).second);
            CHECK(msr::tuple_at(idx, pp) == coords);
            done = true;
            for (int g = pp.m - 1; g >= 0; --g) {
                if (++coords[static_cast<std::size_t>(g)] < pp.q) {
                    done = false;
                    break;
                }
                coords[static_cast<std::size_t>(g)] = 0;
            }
        }
        CHECK(seen.size() == pp.alpha);
    }
}

TEST_CASE("coordinate shift") {
    const CodeParams p2 = derive_params(4, 2, 3);  // q=2
    CHECK(msr::shift_tuple(std::vector<int>{0, 0}, 1, 1, p2) ==
          std::vector<int>{1, 0});

    const CodeParams p3 = derive_params(9, 4, 6);  // q=3, m=3
    CHECK(msr::shift_tuple(std::vector<int>{2, 1, 0}, 3, 2, p3) ==
          std::vector<int>{2, 1, 1});

    // shift by delta then by q-delta is the identity
    for (int delta = 1; delta <= p3.q - 1; ++delta)
        for (std::uint32_t xi = 0; xi < p3.alpha; ++xi) {
            const std::vector<int> x = msr::tuple_at(xi, p3);
            for (int g = 1; g <= p3.m; ++g)
                CHECK(msr::shift_tuple(msr::shift_tuple(x, g, delta, p3), g,
                                       p3.q - delta, p3) == x);
        }

    CHECK_THROWS_AS(msr::shift_tuple(std::vector<int>{0, 0}, 3, 1, p2),
                    msr::ParamError);
    CHECK_THROWS_AS(msr::shift_tuple(std::vector<int>{0, 0}, 1, 2, p2),
                    msr::ParamError);
}
