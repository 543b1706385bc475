#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msrcode/construct.hpp"

namespace msr {

/// Result of exhaustively rank-testing every (n-k)-node column subset of
/// the parity-check matrix. The code has the any-k-of-n property iff every
/// such square submatrix is full rank.
struct MdsReport {
    bool is_mds = false;
    std::uint64_t subsets_checked = 0;
    std::optional<std::vector<int>> first_failure;  // lexicographically smallest
    std::optional<std::size_t> rank_deficiency;
    std::uint64_t subsets_total = 0;   // C(n, n-k)
    std::uint64_t degree_bound = 0;    // C(n, n-k) * (n-k) * alpha

    bool operator==(const MdsReport&) const = default;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10000;

std::uint64_t binomial(int n, int r);

/// Exhaustive certification. Subsets are enumerated in lexicographic order
/// and the scan stops at the first rank-deficient one. Refuses to start
/// (BudgetError) when C(n, n-k) exceeds max_subsets.
MdsReport check_mds(const ParityCheck& pc,
                    std::uint64_t max_subsets = kDefaultSubsetBudget);

struct RhoSearch {
    gf_elem rho = 0;
    MdsReport report;    // the certifying report for rho
    std::uint32_t candidates_tried = 0;
};

/// Scan rho over nonzero field elements in ascending canonical order and
/// return the first value whose parity-check matrix certifies as MDS.
/// Deterministic: identical inputs give the identical rho. Throws
/// VerifyError when the whole field is exhausted (the field is too small).
RhoSearch find_rho(const CodeParams& p, const Field& f,
                   std::uint64_t max_subsets = kDefaultSubsetBudget);

} // namespace msr
