#include "msrcode/mds.hpp"

#include <numeric>
#include <string>

#include "msrcode/linalg.hpp"

namespace msr {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i)
        acc = acc * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return acc;
}

namespace {

// Advance an ascending combination of [1..n] to its lexicographic successor.
bool next_combination(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (r - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

MdsReport check_mds(const ParityCheck& pc, std::uint64_t max_subsets) {
    const CodeParams& p = pc.params();
    const int subset_size = p.n - p.k;
    const std::size_t full_rank = static_cast<std::size_t>(subset_size) * p.alpha;

    MdsReport report;
    report.subsets_total = binomial(p.n, subset_size);
    report.degree_bound = report.subsets_total * full_rank;
    if (report.subsets_total > max_subsets)
        throw BudgetError("mds: " + std::to_string(report.subsets_total) +
                          " subsets exceed the enumeration budget of " +
                          std::to_string(max_subsets));

    std::vector<int> subset(static_cast<std::size_t>(subset_size));
    std::iota(subset.begin(), subset.end(), 1);
    report.is_mds = true;
    do {
        ++report.subsets_checked;
        const std::size_t rank = gf_rank(pc.submatrix(subset), pc.field());
        if (rank != full_rank) {
            report.is_mds = false;
            report.first_failure = subset;
            report.rank_deficiency = full_rank - rank;
            break;
        }
    } while (next_combination(subset, p.n));
    return report;
}

RhoSearch find_rho(const CodeParams& p, const Field& f, std::uint64_t max_subsets) {
    const CauchyMatrix cauchy = build_cauchy(p, f);
    RhoSearch result;
    for (std::uint32_t rho = 1; rho < f.order(); ++rho) {
        ++result.candidates_tried;
        const ParityCheck pc =
            build_parity_check(p, f, cauchy, static_cast<gf_elem>(rho));
        MdsReport report = check_mds(pc, max_subsets);
        if (report.is_mds) {
            result.rho = static_cast<gf_elem>(rho);
            result.report = std::move(report);
            return result;
        }
    }
    const std::uint64_t bound = binomial(p.n, p.n - p.k) *
                                static_cast<std::uint64_t>(p.n - p.k) * p.alpha;
    throw VerifyError(
        "mds: no rho in F_" + std::to_string(f.order()) +
        " certifies the code as MDS (determinant degree bound " +
        std::to_string(bound) + "); retry over a larger field");
}

} // namespace msr
