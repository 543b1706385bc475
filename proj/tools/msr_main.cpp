// msr: command-line front end for the MSR erasure code library.
//
// Subcommands: gen, encode, decode, repair, verify, simulate, params.
// Machine-readable JSON goes to stdout, human summaries to stderr.
// Exit codes: 0 success, 2 usage/parameter error, 3 data/corruption error,
// 4 verification failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msrcode/code_spec.hpp"
#include "msrcode/codec.hpp"
#include "msrcode/mds.hpp"
#include "msrcode/shard_io.hpp"
#include "msrcode/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitVerify = 4;

json params_to_json(const msr::CodeParams& p) {
    return json{{"n", p.n},         {"k", p.k},       {"d", p.d},
                {"q", p.q},         {"t", p.t},       {"s", p.s},
                {"m", p.m},         {"alpha", p.alpha}, {"beta", p.beta},
                {"degenerate", p.degenerate()}};
}

json report_to_json(const msr::MdsReport& r) {
    json doc;
    doc["is_mds"] = r.is_mds;
    doc["subsets_checked"] = r.subsets_checked;
    doc["subsets_total"] = r.subsets_total;
    doc["degree_bound"] = r.degree_bound;
    doc["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    doc["rank_deficiency"] =
        r.rank_deficiency ? json(*r.rank_deficiency) : json(nullptr);
    return doc;
}

json bandwidth_to_json(const msr::BandwidthReport& r) {
    return json{{"failed", r.failed},
                {"helpers", r.helpers},
                {"symbols_downloaded", r.symbols_downloaded},
                {"bytes_downloaded", r.bytes_downloaded},
                {"naive_bytes", r.naive_bytes},
                {"ratio", r.ratio}};
}

msr::FieldChoice parse_field_choice(const std::string& s) {
    if (s == "8")
        return msr::FieldChoice::Width8;
    if (s == "16")
        return msr::FieldChoice::Width16;
    if (s == "auto")
        return msr::FieldChoice::Auto;
    throw msr::ParamError("--field must be 8, 16 or auto");
}

int cmd_gen(int n, int k, int d, const std::string& field_str,
            const std::optional<std::string>& out, std::uint64_t max_subsets) {
    const msr::GenerateResult result =
        msr::generate_spec(n, k, d, parse_field_choice(field_str), max_subsets);
    const std::string text = msr::to_json_string(result.spec);
    if (out)
        msr::save_spec(result.spec, *out);
    std::cout << text;
    if (result.escalated)
        std::cerr << "gen: width-8 search failed, escalated to a 16-bit field\n";
    std::cerr << "gen: certified rho=" << result.spec.rho << " over GF(2^"
              << result.spec.field_width << ") after " << result.candidates_tried
              << " candidate(s); " << result.report.subsets_checked
              << " subsets full-rank"
              << (out ? "; wrote " + *out : std::string()) << "\n";
    return kExitOk;
}

int cmd_params(int n, int k, int d) {
    std::cout << params_to_json(msr::derive_params(n, k, d)).dump(2) << "\n";
    return kExitOk;
}

int cmd_encode(const std::string& spec_path, const std::string& input,
               const std::string& out_dir) {
    const msr::CodeSpec spec = msr::load_spec(spec_path);
    const msr::ParityCheck pc = msr::rebuild(spec);
    const auto paths = msr::encode_file(pc, input, out_dir);
    json doc;
    doc["shards"] = json::array();
    for (const auto& p : paths)
        doc["shards"].push_back(p.string());
    const msr::Shard first = msr::read_shard(paths.front());
    doc["stripes"] = first.header.stripe_count;
    doc["original_length"] = first.header.original_length;
    std::cout << doc.dump(2) << "\n";
    std::cerr << "encode: wrote " << paths.size() << " shards ("
              << first.header.stripe_count << " stripes) to " << out_dir << "\n";
    return kExitOk;
}

int cmd_decode(const std::string& spec_path, const std::string& dir,
               const std::string& output, const std::vector<int>& shards) {
    const msr::CodeSpec spec = msr::load_spec(spec_path);
    const msr::ParityCheck pc = msr::rebuild(spec);
    msr::decode_file(pc, dir, output, shards);
    json doc;
    doc["output"] = output;
    doc["bytes_written"] = static_cast<std::uint64_t>(fs::file_size(output));
    std::cout << doc.dump(2) << "\n";
    std::cerr << "decode: wrote " << doc["bytes_written"] << " bytes to " << output
              << "\n";
    return kExitOk;
}

int cmd_repair(const std::string& spec_path, const std::string& dir, int failed,
               const std::vector<int>& helpers) {
    const msr::CodeSpec spec = msr::load_spec(spec_path);
    const msr::ParityCheck pc = msr::rebuild(spec);
    const msr::ShardRepairOutcome outcome =
        msr::repair_shard(pc, failed, helpers, dir);
    json doc = bandwidth_to_json(outcome.report);
    doc["stripes"] = outcome.stripes;
    doc["shard"] = outcome.path.string();
    std::cout << doc.dump(2) << "\n";
    std::cerr << "repair: regenerated node " << failed << " into "
              << outcome.path.string() << "; downloaded "
              << outcome.report.symbols_downloaded << " symbols (naive decode: "
              << outcome.report.naive_bytes << " bytes)\n";
    return kExitOk;
}

int cmd_verify(const std::string& spec_path, std::uint64_t max_subsets) {
    const msr::CodeSpec spec = msr::load_spec(spec_path);
    const msr::ParityCheck pc = msr::rebuild(spec);
    const msr::MdsReport report = msr::check_mds(pc, max_subsets);
    std::cout << report_to_json(report).dump(2) << "\n";
    if (!report.is_mds) {
        std::cerr << "verify: NOT MDS; first failing subset found after "
                  << report.subsets_checked << " checks\n";
        return kExitVerify;
    }
    std::cerr << "verify: MDS certified over " << report.subsets_checked
              << " subsets\n";
    return kExitOk;
}

int cmd_simulate(const std::string& spec_path, int trials, std::uint64_t seed) {
    const msr::CodeSpec spec = msr::load_spec(spec_path);
    const msr::ParityCheck pc = msr::rebuild(spec);
    const msr::SimSummary s = msr::simulate_repairs(pc, trials, seed);
    json doc{{"trials", s.trials},
             {"seed", s.seed},
             {"exact_repairs", s.exact_repairs},
             {"symbols_per_trial", s.symbols_per_trial},
             {"mean_symbols_downloaded", s.mean_symbols_downloaded},
             {"savings_ratio", s.savings_ratio}};
    std::cout << doc.dump(2) << "\n";
    std::cerr << "simulate: " << s.exact_repairs << "/" << s.trials
              << " exact repairs, " << s.symbols_per_trial
              << " symbols per repair\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MSR erasure code tool: systematic sharding, any-k decode, "
                 "bandwidth-efficient single-node repair"};
    app.require_subcommand(1);

    int n = 0, k = 0, d = 0;
    std::string field = "auto";
    std::optional<std::string> gen_out;
    std::uint64_t max_subsets = msr::kDefaultSubsetBudget;
    std::string spec_path, input, out_path, dir;
    std::vector<int> helpers, shards;
    int failed = 0;
    int trials = 0;
    std::uint64_t seed = 0;

    CLI::App* gen = app.add_subcommand("gen", "Generate a certified code spec");
    gen->add_option("--n", n, "total node count")->required();
    gen->add_option("--k", k, "data node count")->required();
    gen->add_option("--d", d, "helper count (k <= d <= n-1)")->required();
    gen->add_option("--field", field, "field width: 8, 16 or auto");
    gen->add_option("--out", gen_out, "write the spec JSON here");
    gen->add_option("--max-subsets", max_subsets, "MDS enumeration budget");

    CLI::App* params = app.add_subcommand("params", "Derive code parameters");
    params->add_option("--n", n, "total node count")->required();
    params->add_option("--k", k, "data node count")->required();
    params->add_option("--d", d, "helper count")->required();

    CLI::App* enc = app.add_subcommand("encode", "Shard a file into n shards");
    enc->add_option("--spec", spec_path, "code spec JSON")->required();
    enc->add_option("--in", input, "input file")->required();
    enc->add_option("--out", out_path, "output directory")->required();

    CLI::App* dec = app.add_subcommand("decode", "Rebuild the file from >= k shards");
    dec->add_option("--spec", spec_path, "code spec JSON")->required();
    dec->add_option("--dir", dir, "shard directory")->required();
    dec->add_option("--out", out_path, "output file")->required();
    dec->add_option("--shards", shards, "use only these node indices")
        ->delimiter(',');

    CLI::App* rep = app.add_subcommand("repair", "Regenerate one shard from d helpers");
    rep->add_option("--spec", spec_path, "code spec JSON")->required();
    rep->add_option("--dir", dir, "shard directory")->required();
    rep->add_option("--failed", failed, "failed node index (1-based)")->required();
    rep->add_option("--helpers", helpers, "helper node indices a,b,c")
        ->required()
        ->delimiter(',');

    CLI::App* ver = app.add_subcommand("verify", "Exhaustively certify the MDS property");
    ver->add_option("--spec", spec_path, "code spec JSON")->required();
    ver->add_option("--max-subsets", max_subsets, "enumeration budget");

    CLI::App* sim = app.add_subcommand("simulate", "Seeded failure/repair workload");
    sim->add_option("--spec", spec_path, "code spec JSON")->required();
    sim->add_option("--trials", trials, "number of trials")->required();
    sim->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(n, k, d, field, gen_out, max_subsets);
        if (params->parsed())
            return cmd_params(n, k, d);
        if (enc->parsed())
            return cmd_encode(spec_path, input, out_path);
        if (dec->parsed())
            return cmd_decode(spec_path, dir, out_path, shards);
        if (rep->parsed())
            return cmd_repair(spec_path, dir, failed, helpers);
        if (ver->parsed())
            return cmd_verify(spec_path, max_subsets);
        if (sim->parsed())
            return cmd_simulate(spec_path, trials, seed);
    } catch (const msr::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const msr::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const msr::VerifyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
