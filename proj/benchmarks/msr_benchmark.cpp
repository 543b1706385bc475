#include <benchmark/benchmark.h>

#include <optional>
#include <random>
#include <vector>

#include "msrcode/codec.hpp"
#include "msrcode/mds.hpp"
#include "msrcode/repair.hpp"

namespace {

using namespace msr;

ParityCheck make_pc(int n, int k, int d) {
    const CodeParams p = derive_params(n, k, d);
    const Field& f = Field::gf256();
    return build_parity_check(p, f, find_rho(p, f).rho);
}

std::vector<gf_elem> random_message(const CodeParams& p, std::uint32_t order) {
    std::mt19937_64 rng(42);
    std::vector<gf_elem> msg(static_cast<std::size_t>(p.k) * p.alpha);
    for (auto& s : msg)
        s = static_cast<gf_elem>(rng() % order);
    return msg;
}

void BM_FieldMul8(benchmark::State& state) {
    const Field& f = Field::gf256();
    gf_elem x = 57;
    for (auto _ : state) {
        x = f.mul(x, 29);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul8);

void BM_FieldMul16(benchmark::State& state) {
    const Field& f = Field::gf65536();
    gf_elem x = 30001;
    for (auto _ : state) {
        x = f.mul(x, 4099);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul16);

void BM_BuildParityCheck(benchmark::State& state) {
    const CodeParams p = derive_params(9, 4, 6);
    const Field& f = Field::gf256();
    for (auto _ : state) {
        const ParityCheck pc = build_parity_check(p, f, 13);
        benchmark::DoNotOptimize(pc.row_count());
    }
}
BENCHMARK(BM_BuildParityCheck);

void BM_CheckMds(benchmark::State& state) {
    const ParityCheck pc = make_pc(9, 4, 6);
    for (auto _ : state) {
        const MdsReport report = check_mds(pc);
        benchmark::DoNotOptimize(report.is_mds);
    }
}
BENCHMARK(BM_CheckMds)->Unit(benchmark::kMillisecond);

void BM_EncodeStripe(benchmark::State& state) {
    const ParityCheck pc = make_pc(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(1)),
                                   static_cast<int>(state.range(2)));
    const SystematicEncoder encoder(pc);
    const auto msg = random_message(pc.params(), pc.field().order());
    std::vector<gf_elem> out(
        static_cast<std::size_t>(pc.params().n) * pc.params().alpha);
    for (auto _ : state) {
        encoder.encode_into(msg, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(msg.size()));
}
BENCHMARK(BM_EncodeStripe)->Args({5, 2, 3})->Args({9, 4, 6});

void BM_RepairNode(benchmark::State& state) {
    const ParityCheck pc = make_pc(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(1)),
                                   static_cast<int>(state.range(2)));
    const CodeParams& p = pc.params();
    const Codeword cw = encode(random_message(p, pc.field().order()), pc);
    std::vector<int> helpers;
    for (int j = 2; static_cast<int>(helpers.size()) < p.d; ++j)
        helpers.push_back(j);
    const SymbolAccessor fetch = [&](int node, std::uint32_t tuple) {
        return std::optional<gf_elem>(cw.at(node, tuple));
    };
    for (auto _ : state) {
        const RepairResult r = repair(1, helpers, fetch, pc);
        benchmark::DoNotOptimize(r.block.data());
    }
}
BENCHMARK(BM_RepairNode)->Args({5, 2, 3})->Args({9, 4, 6});

void BM_ReconstructFromK(benchmark::State& state) {
    const ParityCheck pc = make_pc(6, 3, 4);
    const CodeParams& p = pc.params();
    const Codeword cw = encode(random_message(p, pc.field().order()), pc);
    std::map<int, std::vector<gf_elem>> available;
    for (int node : {2, 4, 6})
        available[node] = {cw.block(node).begin(), cw.block(node).end()};
    for (auto _ : state) {
        const Codeword rebuilt = reconstruct(available, pc);
        benchmark::DoNotOptimize(rebuilt.symbols.data());
    }
}
BENCHMARK(BM_ReconstructFromK);

} // namespace

BENCHMARK_MAIN();
