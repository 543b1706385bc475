#include "msrcode/params.hpp"

#include <string>

namespace msr {

namespace {

// Node blocks are materialized in memory; keep alpha within sane bounds.
constexpr std::uint64_t kMaxAlpha = 1u << 24;

} // namespace

CodeParams derive_params(int n, int k, int d) {
    if (k < 1)
        throw ParamError("params: k must be at least 1");
    if (d < k)
        throw ParamError("params: d must be at least k");
    if (d > n - 1)
        throw ParamError("params: d must be at most n-1");

    CodeParams p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.q = d - k + 1;
    // n = (t-1)q + s with 0 <= s <= q-1 is plain Euclidean division.
    p.s = n % p.q;
    p.t = n / p.q + 1;
    if (p.t < 2)
        throw ParamError("params: no valid grouping (n < d-k+1)");
    p.m = (p.s == 0) ? p.t - 1 : p.t;

    std::uint64_t alpha = 1;
    for (int g = 0; g < p.m; ++g) {
        alpha *= static_cast<std::uint64_t>(p.q);
        if (alpha > kMaxAlpha)
            throw ParamError("params: sub-packetization q^m exceeds the supported size");
    }
    p.alpha = static_cast<std::uint32_t>(alpha);
    p.beta = static_cast<std::uint32_t>(alpha / static_cast<std::uint64_t>(p.q));
    return p;
}

bool node_exists(NodeId id, const CodeParams& p) {
    return id.group >= 1 && id.group <= p.m && id.theta >= 0 &&
           id.theta < p.group_size(id.group);
}

int node_index(NodeId id, const CodeParams& p) {
    if (!node_exists(id, p))
        throw ParamError("params: node (" + std::to_string(id.group) + "," +
                         std::to_string(id.theta) + ") does not exist");
    return (id.group - 1) * p.q + id.theta + 1;
}

NodeId node_at(int index, const CodeParams& p) {
    if (index < 1 || index > p.n)
        throw ParamError("params: node index " + std::to_string(index) +
                         " out of range [1," + std::to_string(p.n) + "]");
    NodeId id;
    id.group = (index - 1) / p.q + 1;
    id.theta = (index - 1) % p.q;
    return id;
}

std::uint32_t tuple_index(std::span<const int> coords, const CodeParams& p) {
    if (coords.size() != static_cast<std::size_t>(p.m))
        throw ParamError("params: tuple must have m coordinates");
    std::uint32_t idx = 0;
    for (int c : coords) {
        if (c < 0 || c >= p.q)
            throw ParamError("params: tuple coordinate out of [0,q-1]");
        idx = idx * static_cast<std::uint32_t>(p.q) + static_cast<std::uint32_t>(c);
    }
    return idx;
}

std::vector<int> tuple_at(std::uint32_t index, const CodeParams& p) {
    if (index >= p.alpha)
        throw ParamError("params: tuple index out of [0,alpha-1]");
    std::vector<int> coords(static_cast<std::size_t>(p.m));
    for (int g = p.m - 1; g >= 0; --g) {
        coords[static_cast<std::size_t>(g)] = static_cast<int>(index % static_cast<std::uint32_t>(p.q));
        index /= static_cast<std::uint32_t>(p.q);
    }
    return coords;
}

std::vector<int> shift_tuple(std::span<const int> coords, int g, int delta,
                             const CodeParams& p) {
    if (g < 1 || g > p.m)
        throw ParamError("params: shift group out of [1,m]");
    if (delta < 1 || delta > p.q - 1)
        throw ParamError("params: shift delta out of [1,q-1]");
    std::vector<int> out(coords.begin(), coords.end());
    int& c = out[static_cast<std::size_t>(g - 1)];
    c = (c - delta % p.q + p.q) % p.q;
    return out;
}

} // namespace msr
