#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "msrcode/errors.hpp"

namespace msr {

/// All scalars derived from (n, k, d).
///
/// Nodes are grouped into m groups of q = d-k+1 slots each, except that
/// when the group count does not divide n evenly the last group holds only
/// s slots. Each node stores alpha = q^m symbols addressed by m-digit
/// base-q tuples; repair downloads beta = alpha/q symbols per helper.
struct CodeParams {
    int n = 0;  // total nodes
    int k = 0;  // data nodes; any k blocks recover the codeword
    int d = 0;  // helpers contacted during repair, k <= d <= n-1
    int q = 0;  // d - k + 1
    int t = 0;  // n = (t-1)q + s with t >= 2
    int s = 0;  // size of the trailing partial group, 0 <= s <= q-1
    int m = 0;  // tuple length: t-1 when s == 0, t otherwise
    std::uint32_t alpha = 0;  // symbols per node, q^m
    std::uint32_t beta = 0;   // symbols fetched per helper, q^(m-1)

    /// q == 1 collapses to a scalar MDS code: alpha == beta == 1 and no
    /// shift constraints exist.
    bool degenerate() const { return q == 1; }

    int num_groups() const { return m; }
    /// Slots in group g (1-based); only the last group can be partial.
    int group_size(int g) const { return (s > 0 && g == m) ? s : q; }
};

/// Node address (group, theta); group is 1-based, theta 0-based.
struct NodeId {
    int group = 0;
    int theta = 0;
    bool operator==(const NodeId&) const = default;
};

/// Derive (q, t, s, m, alpha, beta) from (n, k, d).
/// Throws ParamError unless 1 <= k <= d <= n-1 and the result is tractable.
CodeParams derive_params(int n, int k, int d);

bool node_exists(NodeId id, const CodeParams& p);

/// Flat node number in [1, n]: (group-1)*q + theta + 1.
int node_index(NodeId id, const CodeParams& p);

/// Inverse of node_index.
NodeId node_at(int index, const CodeParams& p);

/// Big-endian mixed-radix flattening of an m-digit base-q tuple.
std::uint32_t tuple_index(std::span<const int> coords, const CodeParams& p);

/// Inverse of tuple_index.
std::vector<int> tuple_at(std::uint32_t index, const CodeParams& p);

/// Replace coordinate g (1-based) by (x_g - delta) mod q.
std::vector<int> shift_tuple(std::span<const int> coords, int g, int delta,
                             const CodeParams& p);

} // namespace msr
