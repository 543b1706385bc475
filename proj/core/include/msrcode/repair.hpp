#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "msrcode/construct.hpp"
#include "msrcode/linalg.hpp"

namespace msr {

struct FetchRequest {
    int node = 0;              // 1-based
    std::uint32_t tuple = 0;   // tuple index within the node block
    bool operator==(const FetchRequest&) const = default;
};

/// Serves one symbol of the stored codeword; nullopt means the symbol
/// could not be fetched and aborts the repair.
using SymbolAccessor =
    std::function<std::optional<gf_elem>(int node, std::uint32_t tuple)>;

struct BandwidthReport {
    int failed = 0;
    std::vector<int> helpers;
    std::uint64_t symbols_downloaded = 0;  // always d * beta
    std::uint64_t bytes_downloaded = 0;
    std::uint64_t naive_bytes = 0;         // k * alpha * symbol_bytes
    double ratio = 0.0;                    // k*alpha / (d*beta)
};

/// The exact fetches repair needs: for each helper (ascending node index)
/// the beta tuples whose failed-group coordinate equals the failed node's
/// theta, in tuple-index order.
std::vector<FetchRequest> repair_plan(NodeId failed, std::span<const NodeId> helpers,
                                      const CodeParams& p);

/// Two-stage single-node repair.
///
/// Stage 1 solves, per fetched tuple, the anchor constraints for the n-d
/// non-helper symbols (the failed one plus bystanders); the system matrix
/// is the same Cauchy submatrix for every tuple and is reduced once.
/// Stage 2 isolates, per fetched tuple and delta, the single unknown
/// failed-node symbol in a shift constraint: every other term is a
/// stage-1-known symbol and the unknown's coefficient is rho.
class RepairSession {
public:
    RepairSession(NodeId failed, std::vector<NodeId> helpers, const ParityCheck& pc);

    const std::vector<FetchRequest>& plan() const { return plan_; }

    /// fetched[i] answers plan()[i].
    void run_stage1(std::span<const gf_elem> fetched);

    /// Symbols of a node at the repair tuples, available after stage 1;
    /// position i corresponds to the i-th planned tuple.
    std::span<const gf_elem> stage1_block(int node) const;

    void run_stage2();

    /// The failed node's full block, valid after stage 2.
    const std::vector<gf_elem>& result() const;

    BandwidthReport report() const;

private:
    std::uint32_t full_tuple_of(std::uint32_t pos) const;
    std::uint32_t pos_of_full_tuple(std::uint32_t full) const;

    const ParityCheck& pc_;
    NodeId failed_;
    int failed_index_;
    std::vector<int> helper_indices_;     // ascending
    std::vector<int> unknown_indices_;    // non-helpers incl. failed, ascending
    std::vector<std::uint32_t> tuples_;   // repair tuple indices, ascending
    std::vector<FetchRequest> plan_;
    std::vector<gf_elem> stage1_;        // n x beta, node-major
    std::vector<gf_elem> result_;        // alpha symbols once complete
    bool stage1_done_ = false;
    bool stage2_done_ = false;
};

struct RepairResult {
    std::vector<gf_elem> block;  // alpha symbols of the failed node
    BandwidthReport report;
};

/// Plan, fetch through the accessor, and run both stages.
/// Throws DataError naming the (node, tuple) of any failed fetch.
RepairResult repair(NodeId failed, std::span<const NodeId> helpers,
                    const SymbolAccessor& fetch, const ParityCheck& pc);

/// Convenience overload on flat node indices.
RepairResult repair(int failed_index, std::span<const int> helper_indices,
                    const SymbolAccessor& fetch, const ParityCheck& pc);

} // namespace msr
