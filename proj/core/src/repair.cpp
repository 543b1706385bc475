#include "msrcode/repair.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace msr {

namespace {

std::vector<int> validated_helper_indices(NodeId failed,
                                          std::span<const NodeId> helpers,
                                          const CodeParams& p) {
    if (!node_exists(failed, p))
        throw ParamError("repair: failed node does not exist");
    if (helpers.size() != static_cast<std::size_t>(p.d))
        throw ParamError("repair: need exactly d=" + std::to_string(p.d) +
                         " helpers, got " + std::to_string(helpers.size()));
    const int failed_index = node_index(failed, p);
    std::set<int> indices;
    for (const NodeId& h : helpers) {
        const int idx = node_index(h, p);
        if (idx == failed_index)
            throw ParamError("repair: the failed node cannot be a helper");
        if (!indices.insert(idx).second)
            throw ParamError("repair: duplicate helper node " + std::to_string(idx));
    }
    return {indices.begin(), indices.end()};
}

// Repair tuples: coordinate failed.group pinned to failed.theta; the
// remaining m-1 coordinates sweep [0,q-1]^(m-1) in tuple-index order.
std::vector<std::uint32_t> repair_tuples(NodeId failed, const CodeParams& p) {
    std::vector<std::uint32_t> tuples;
    tuples.reserve(p.beta);
    for (std::uint32_t pos = 0; pos < p.beta; ++pos) {
        std::uint32_t rest = pos;
        std::uint32_t full = 0;
        std::uint32_t scale = 1;
        for (int g = p.m; g >= 1; --g) {
            std::uint32_t digit;
            if (g == failed.group) {
                digit = static_cast<std::uint32_t>(failed.theta);
            } else {
                digit = rest % static_cast<std::uint32_t>(p.q);
                rest /= static_cast<std::uint32_t>(p.q);
            }
            full += digit * scale;
            scale *= static_cast<std::uint32_t>(p.q);
        }
        tuples.push_back(full);
    }
    return tuples;
}

} // namespace

std::vector<FetchRequest> repair_plan(NodeId failed, std::span<const NodeId> helpers,
                                      const CodeParams& p) {
    const std::vector<int> helper_indices =
        validated_helper_indices(failed, helpers, p);
    const std::vector<std::uint32_t> tuples = repair_tuples(failed, p);

    std::vector<FetchRequest> plan;
    plan.reserve(static_cast<std::size_t>(p.d) * p.beta);
    for (int h : helper_indices)
        for (std::uint32_t t : tuples)
            plan.push_back({h, t});
    return plan;
}

RepairSession::RepairSession(NodeId failed, std::vector<NodeId> helpers,
                             const ParityCheck& pc)
    : pc_(pc), failed_(failed), failed_index_(node_index(failed, pc.params())),
      helper_indices_(validated_helper_indices(failed, helpers, pc.params())),
      tuples_(repair_tuples(failed, pc.params())),
      plan_(repair_plan(failed, helpers, pc.params())) {
    const CodeParams& p = pc_.params();
    std::vector<bool> is_helper(static_cast<std::size_t>(p.n) + 1, false);
    for (int h : helper_indices_)
        is_helper[static_cast<std::size_t>(h)] = true;
    for (int j = 1; j <= p.n; ++j)
        if (!is_helper[static_cast<std::size_t>(j)])
            unknown_indices_.push_back(j);
    stage1_.assign(static_cast<std::size_t>(p.n) * p.beta, 0);
}

std::uint32_t RepairSession::full_tuple_of(std::uint32_t pos) const {
    return tuples_[pos];
}

std::uint32_t RepairSession::pos_of_full_tuple(std::uint32_t full) const {
    const CodeParams& p = pc_.params();
    std::uint32_t pos = 0;
    std::uint32_t value = full;
    std::uint32_t scale = 1;
    bool pinned_matches = false;
    for (int g = p.m; g >= 1; --g) {
        const std::uint32_t digit = value % static_cast<std::uint32_t>(p.q);
        value /= static_cast<std::uint32_t>(p.q);
        if (g == failed_.group) {
            pinned_matches = digit == static_cast<std::uint32_t>(failed_.theta);
        } else {
            pos += digit * scale;
            scale *= static_cast<std::uint32_t>(p.q);
        }
    }
    if (!pinned_matches)
        throw InternalError("repair: tuple is not a repair tuple");
    return pos;
}

void RepairSession::run_stage1(std::span<const gf_elem> fetched) {
    if (fetched.size() != plan_.size())
        throw ParamError("repair: fetched symbol count does not match the plan");
    const CodeParams& p = pc_.params();
    const Field& f = pc_.field();
    const CauchyMatrix& cauchy = pc_.cauchy();
    const int unknowns = p.n - p.d;

    for (std::size_t i = 0; i < plan_.size(); ++i)
        stage1_[static_cast<std::size_t>(plan_[i].node - 1) * p.beta +
                pos_of_full_tuple(plan_[i].tuple)] = fetched[i];

    // One Cauchy subsystem serves every repair tuple.
    Matrix a(static_cast<std::size_t>(unknowns), static_cast<std::size_t>(unknowns));
    for (int r = 0; r < unknowns; ++r)
        for (int u = 0; u < unknowns; ++u)
            a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(u)) =
                cauchy.at(r + 1, unknown_indices_[static_cast<std::size_t>(u)]);
    const LinearSystem system(a, f);
    if (!system.full_column_rank())
        throw InternalError("repair: stage-1 Cauchy subsystem is singular");

    std::vector<gf_elem> rhs(static_cast<std::size_t>(unknowns));
    for (std::uint32_t pos = 0; pos < p.beta; ++pos) {
        for (int r = 0; r < unknowns; ++r) {
            gf_elem acc = 0;
            for (int h : helper_indices_)
                acc = Field::add(
                    acc, f.mul(cauchy.at(r + 1, h),
                               stage1_[static_cast<std::size_t>(h - 1) * p.beta + pos]));
            rhs[static_cast<std::size_t>(r)] = acc;
        }
        const std::vector<gf_elem> solved = system.solve(rhs);
        for (int u = 0; u < unknowns; ++u)
            stage1_[static_cast<std::size_t>(unknown_indices_[static_cast<std::size_t>(u)] - 1) *
                        p.beta +
                    pos] = solved[static_cast<std::size_t>(u)];
    }
    stage1_done_ = true;
}

std::span<const gf_elem> RepairSession::stage1_block(int node) const {
    if (!stage1_done_)
        throw InternalError("repair: stage 1 has not run");
    const CodeParams& p = pc_.params();
    if (node < 1 || node > p.n)
        throw ParamError("repair: node index out of range");
    return {stage1_.data() + static_cast<std::size_t>(node - 1) * p.beta, p.beta};
}

void RepairSession::run_stage2() {
    if (!stage1_done_)
        throw InternalError("repair: stage 2 requires stage 1");
    const CodeParams& p = pc_.params();
    const Field& f = pc_.field();
    const CauchyMatrix& cauchy = pc_.cauchy();
    const gf_elem rho_inv = f.inv(pc_.rho());

    result_.assign(p.alpha, 0);
    for (std::uint32_t pos = 0; pos < p.beta; ++pos)
        result_[full_tuple_of(pos)] =
            stage1_[static_cast<std::size_t>(failed_index_ - 1) * p.beta + pos];

    for (std::uint32_t pos = 0; pos < p.beta; ++pos) {
        const std::vector<int> y = tuple_at(full_tuple_of(pos), p);
        for (int delta = 1; delta <= p.q - 1; ++delta) {
            gf_elem acc = 0;
            for (int j = 1; j <= p.n; ++j)
                acc = Field::add(
                    acc, f.mul(cauchy.at(p.n - p.d + delta, j),
                               stage1_[static_cast<std::size_t>(j - 1) * p.beta + pos]));
            for (int g = 1; g <= p.m; ++g) {
                if (g == failed_.group)
                    continue;  // the unknown term
                const NodeId node{g, y[static_cast<std::size_t>(g - 1)]};
                if (!node_exists(node, p))
                    continue;
                const std::uint32_t shifted_pos =
                    pos_of_full_tuple(tuple_index(shift_tuple(y, g, delta, p), p));
                acc = Field::add(
                    acc,
                    f.mul(pc_.rho(),
                          stage1_[static_cast<std::size_t>(node_index(node, p) - 1) *
                                      p.beta +
                                  shifted_pos]));
            }
            result_[tuple_index(shift_tuple(y, failed_.group, delta, p), p)] =
                f.mul(rho_inv, acc);
        }
    }
    stage2_done_ = true;
}

const std::vector<gf_elem>& RepairSession::result() const {
    if (!stage2_done_)
        throw InternalError("repair: result requested before stage 2");
    return result_;
}

BandwidthReport RepairSession::report() const {
    const CodeParams& p = pc_.params();
    BandwidthReport r;
    r.failed = failed_index_;
    r.helpers = helper_indices_;
    r.symbols_downloaded = static_cast<std::uint64_t>(p.d) * p.beta;
    r.bytes_downloaded = r.symbols_downloaded * pc_.field().symbol_bytes();
    r.naive_bytes =
        static_cast<std::uint64_t>(p.k) * p.alpha * pc_.field().symbol_bytes();
    r.ratio = static_cast<double>(static_cast<std::uint64_t>(p.k) * p.alpha) /
              static_cast<double>(r.symbols_downloaded);
    return r;
}

RepairResult repair(NodeId failed, std::span<const NodeId> helpers,
                    const SymbolAccessor& fetch, const ParityCheck& pc) {
    RepairSession session(failed, {helpers.begin(), helpers.end()}, pc);
    std::vector<gf_elem> fetched;
    fetched.reserve(session.plan().size());
    for (const FetchRequest& req : session.plan()) {
        const std::optional<gf_elem> sym = fetch(req.node, req.tuple);
        if (!sym)
            throw DataError("repair: fetch failed for node " +
                            std::to_string(req.node) + " tuple " +
                            std::to_string(req.tuple));
        fetched.push_back(*sym);
    }
    session.run_stage1(fetched);
    session.run_stage2();
    return {session.result(), session.report()};
}

RepairResult repair(int failed_index, std::span<const int> helper_indices,
                    const SymbolAccessor& fetch, const ParityCheck& pc) {
    const CodeParams& p = pc.params();
    std::vector<NodeId> helpers;
    helpers.reserve(helper_indices.size());
    for (int h : helper_indices)
        helpers.push_back(node_at(h, p));
    return repair(node_at(failed_index, p), helpers, fetch, pc);
}

} // namespace msr
