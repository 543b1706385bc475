#include "msrcode/sim.hpp"

#include <random>
#include <string>

#include "msrcode/codec.hpp"
#include "msrcode/repair.hpp"

namespace msr {

SimSummary simulate_repairs(const ParityCheck& pc, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw ParamError("simulate: trials must be at least 1");
    const CodeParams& p = pc.params();
    const SystematicEncoder encoder(pc);
    // mt19937_64 plus modulo keeps the stream identical across platforms;
    // the slight bias is irrelevant here.
    std::mt19937_64 rng(seed);

    SimSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.symbols_per_trial = static_cast<std::uint64_t>(p.d) * p.beta;
    summary.savings_ratio =
        static_cast<double>(static_cast<std::uint64_t>(p.k) * p.alpha) /
        static_cast<double>(summary.symbols_per_trial);

    std::vector<gf_elem> message(static_cast<std::size_t>(p.k) * p.alpha);
    std::uint64_t total_symbols = 0;
    for (int trial = 0; trial < trials; ++trial) {
        for (auto& s : message)
            s = static_cast<gf_elem>(rng() % pc.field().order());
        const Codeword cw = encoder.encode(message);

        const int failed = static_cast<int>(rng() % static_cast<std::uint64_t>(p.n)) + 1;
        std::vector<int> survivors;
        for (int j = 1; j <= p.n; ++j)
            if (j != failed)
                survivors.push_back(j);
        for (std::size_t i = survivors.size(); i > 1; --i)
            std::swap(survivors[i - 1], survivors[rng() % i]);
        std::vector<int> helpers(survivors.begin(),
                                 survivors.begin() + p.d);

        const SymbolAccessor fetch = [&](int node, std::uint32_t tuple) {
            return std::optional<gf_elem>(cw.at(node, tuple));
        };
        const RepairResult result = repair(failed, helpers, fetch, pc);
        if (result.report.symbols_downloaded != summary.symbols_per_trial)
            throw InternalError("simulate: download count deviates from d*beta");
        total_symbols += result.report.symbols_downloaded;

        bool exact = true;
        for (std::uint32_t t = 0; t < p.alpha; ++t)
            exact = exact && result.block[t] == cw.at(failed, t);
        if (!exact)
            throw VerifyError("simulate: trial " + std::to_string(trial) +
                              " repaired node " + std::to_string(failed) +
                              " inexactly");
        ++summary.exact_repairs;
    }
    summary.mean_symbols_downloaded =
        static_cast<double>(total_symbols) / static_cast<double>(trials);
    return summary;
}

} // namespace msr
