#include "msrcode/shard_io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <set>

namespace msr {

namespace fs = std::filesystem;

namespace {

void put_u16(std::uint8_t* p, std::uint16_t v) {
    p[0] = static_cast<std::uint8_t>(v & 0xFF);
    p[1] = static_cast<std::uint8_t>(v >> 8);
}

void put_u32(std::uint8_t* p, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        p[i] = static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF);
}

void put_u64(std::uint8_t* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        p[i] = static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF);
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i)
        v = (v << 8) | p[i];
    return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | p[i];
    return v;
}

ShardHeader make_header(const ParityCheck& pc, int node_index,
                        std::uint32_t stripes, std::uint64_t original_length) {
    const CodeParams& p = pc.params();
    ShardHeader h;
    h.node_index = static_cast<std::uint16_t>(node_index);
    h.n = static_cast<std::uint16_t>(p.n);
    h.k = static_cast<std::uint16_t>(p.k);
    h.d = static_cast<std::uint16_t>(p.d);
    h.field_width = static_cast<std::uint8_t>(pc.field().width_bits());
    h.stripe_count = stripes;
    h.original_length = original_length;
    return h;
}

void check_header_matches(const ShardHeader& h, const ParityCheck& pc,
                          const fs::path& path) {
    const CodeParams& p = pc.params();
    if (h.n != p.n || h.k != p.k || h.d != p.d ||
        h.field_width != pc.field().width_bits())
        throw DataError("shard: " + path.string() +
                        " does not belong to this code (n,k,d,width mismatch)");
    if (h.node_index < 1 || h.node_index > p.n)
        throw DataError("shard: " + path.string() + " has node index out of range");
}

} // namespace

std::array<std::uint8_t, kShardHeaderSize> encode_shard_header(const ShardHeader& h) {
    std::array<std::uint8_t, kShardHeaderSize> out{};
    std::memcpy(out.data(), kShardMagic.data(), 4);
    out[4] = kShardFormatVersion;
    put_u16(out.data() + 5, h.node_index);
    put_u16(out.data() + 7, h.n);
    put_u16(out.data() + 9, h.k);
    put_u16(out.data() + 11, h.d);
    out[13] = h.field_width;
    put_u32(out.data() + 14, h.stripe_count);
    put_u64(out.data() + 18, h.original_length);
    return out;
}

ShardHeader decode_shard_header(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kShardHeaderSize)
        throw DataError("shard: header truncated");
    if (std::memcmp(bytes.data(), kShardMagic.data(), 4) != 0)
        throw DataError("shard: bad magic (not a shard file)");
    if (bytes[4] != kShardFormatVersion)
        throw DataError("shard: unsupported format version " +
                        std::to_string(bytes[4]));
    ShardHeader h;
    h.node_index = get_u16(bytes.data() + 5);
    h.n = get_u16(bytes.data() + 7);
    h.k = get_u16(bytes.data() + 9);
    h.d = get_u16(bytes.data() + 11);
    h.field_width = bytes[13];
    h.stripe_count = get_u32(bytes.data() + 14);
    h.original_length = get_u64(bytes.data() + 18);
    if (h.field_width != 8 && h.field_width != 16)
        throw DataError("shard: unsupported field width " +
                        std::to_string(h.field_width));
    return h;
}

std::string shard_filename(int node_index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "shard_%03d.msr", node_index);
    return buf;
}

void write_shard(const fs::path& path, const ShardHeader& header,
                 std::span<const gf_elem> payload) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DataError("shard: cannot open " + path.string() + " for writing");
    const auto head = encode_shard_header(header);
    out.write(reinterpret_cast<const char*>(head.data()),
              static_cast<std::streamsize>(head.size()));
    const unsigned sb = header.field_width / 8;
    std::vector<std::uint8_t> buf(payload.size() * sb);
    for (std::size_t i = 0; i < payload.size(); ++i)
        store_symbol_le(buf.data() + i * sb, payload[i], header.field_width);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw DataError("shard: failed writing " + path.string());
}

Shard read_shard(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("shard: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (bytes.size() < kShardHeaderSize)
        throw DataError("shard: " + path.string() + " is truncated");
    Shard shard;
    shard.header = decode_shard_header(bytes);
    const unsigned sb = shard.header.field_width / 8;
    const std::size_t expected = bytes.size() - kShardHeaderSize;
    if (expected % sb != 0)
        throw DataError("shard: " + path.string() + " payload is not whole symbols");
    shard.payload.resize(expected / sb);
    // Payload length is pinned by the header; anything else is truncation
    // or trailing garbage. alpha is unknown here, so only stripe_count == 0
    // can be checked without the code; callers recheck against alpha.
    if (shard.header.stripe_count == 0 && !shard.payload.empty())
        throw DataError("shard: " + path.string() +
                        " has payload but claims zero stripes");
    for (std::size_t i = 0; i < shard.payload.size(); ++i)
        shard.payload[i] = load_symbol_le(bytes.data() + kShardHeaderSize + i * sb,
                                          shard.header.field_width);
    return shard;
}

std::vector<fs::path> encode_file(const ParityCheck& pc, const fs::path& input,
                                  const fs::path& out_dir) {
    const CodeParams& p = pc.params();
    const unsigned sb = pc.field().symbol_bytes();
    const std::size_t stripe_bytes = static_cast<std::size_t>(p.k) * p.alpha * sb;

    std::ifstream in(input, std::ios::binary);
    if (!in)
        throw DataError("encode: cannot open " + input.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    const std::uint64_t original_length = data.size();
    data.resize((data.size() + stripe_bytes - 1) / stripe_bytes * stripe_bytes, 0);
    const std::uint32_t stripes =
        static_cast<std::uint32_t>(data.size() / stripe_bytes);

    fs::create_directories(out_dir);
    const SystematicEncoder encoder(pc);

    std::vector<std::vector<gf_elem>> node_payloads(
        static_cast<std::size_t>(p.n));
    for (auto& v : node_payloads)
        v.resize(static_cast<std::size_t>(stripes) * p.alpha);

    std::vector<gf_elem> message(static_cast<std::size_t>(p.k) * p.alpha);
    std::vector<gf_elem> stripe(static_cast<std::size_t>(p.n) * p.alpha);
    for (std::uint32_t st = 0; st < stripes; ++st) {
        const std::uint8_t* base = data.data() + static_cast<std::size_t>(st) * stripe_bytes;
        for (std::size_t i = 0; i < message.size(); ++i)
            message[i] = load_symbol_le(base + i * sb, pc.field().width_bits());
        encoder.encode_into(message, stripe);
        for (int j = 0; j < p.n; ++j)
            std::copy(stripe.begin() + static_cast<std::ptrdiff_t>(j) * p.alpha,
                      stripe.begin() + static_cast<std::ptrdiff_t>(j + 1) * p.alpha,
                      node_payloads[static_cast<std::size_t>(j)].begin() +
                          static_cast<std::ptrdiff_t>(st) * p.alpha);
    }

    std::vector<fs::path> paths;
    for (int j = 1; j <= p.n; ++j) {
        const fs::path path = out_dir / shard_filename(j);
        write_shard(path, make_header(pc, j, stripes, original_length),
                    node_payloads[static_cast<std::size_t>(j - 1)]);
        paths.push_back(path);
    }
    return paths;
}

namespace {

std::map<int, Shard> collect_shards(const ParityCheck& pc, const fs::path& shard_dir,
                                    std::span<const int> use_nodes) {
    std::map<int, Shard> shards;
    if (!use_nodes.empty()) {
        for (int node : use_nodes) {
            Shard s = read_shard(shard_dir / shard_filename(node));
            check_header_matches(s.header, pc, shard_dir / shard_filename(node));
            if (s.header.node_index != node)
                throw DataError("shard: node index in header does not match filename");
            if (!shards.emplace(node, std::move(s)).second)
                throw ParamError("decode: duplicate shard index " +
                                 std::to_string(node));
        }
        return shards;
    }
    for (int node = 1; node <= pc.params().n; ++node) {
        const fs::path path = shard_dir / shard_filename(node);
        if (!fs::exists(path))
            continue;
        Shard s = read_shard(path);
        check_header_matches(s.header, pc, path);
        if (s.header.node_index != node)
            throw DataError("shard: node index in header does not match filename");
        shards.emplace(node, std::move(s));
    }
    return shards;
}

} // namespace

void decode_file(const ParityCheck& pc, const fs::path& shard_dir,
                 const fs::path& output, std::span<const int> use_nodes) {
    const CodeParams& p = pc.params();
    const unsigned sb = pc.field().symbol_bytes();
    std::map<int, Shard> shards = collect_shards(pc, shard_dir, use_nodes);
    if (static_cast<int>(shards.size()) < p.k)
        throw DataError("decode: need at least k=" + std::to_string(p.k) +
                        " shards, found " + std::to_string(shards.size()));

    const ShardHeader& ref = shards.begin()->second.header;
    for (const auto& [node, s] : shards) {
        if (s.header.stripe_count != ref.stripe_count ||
            s.header.original_length != ref.original_length)
            throw DataError("decode: shards disagree on stripe count or file length");
        if (s.payload.size() !=
            static_cast<std::size_t>(s.header.stripe_count) * p.alpha)
            throw DataError("decode: shard payload length does not match header");
    }
    const std::size_t stripe_payload = static_cast<std::size_t>(p.k) * p.alpha * sb;
    if (ref.original_length >
        static_cast<std::uint64_t>(ref.stripe_count) * stripe_payload)
        throw DataError("decode: header claims more data than the stripes hold");

    std::vector<int> have;
    for (const auto& [node, s] : shards)
        have.push_back(node);
    std::vector<int> missing;
    for (int j = 1; j <= p.n; ++j)
        if (!std::binary_search(have.begin(), have.end(), j))
            missing.push_back(j);

    const ErasureSolver solver(pc, missing);
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DataError("decode: cannot open " + output.string() + " for writing");

    const std::size_t stripe_bytes = static_cast<std::size_t>(p.k) * p.alpha * sb;
    std::vector<gf_elem> stripe(static_cast<std::size_t>(p.n) * p.alpha);
    std::vector<std::uint8_t> buf(stripe_bytes);
    std::uint64_t remaining = ref.original_length;
    for (std::uint32_t st = 0; st < ref.stripe_count && remaining > 0; ++st) {
        std::fill(stripe.begin(), stripe.end(), 0);
        for (const auto& [node, s] : shards)
            std::copy(s.payload.begin() + static_cast<std::ptrdiff_t>(st) * p.alpha,
                      s.payload.begin() + static_cast<std::ptrdiff_t>(st + 1) * p.alpha,
                      stripe.begin() + static_cast<std::ptrdiff_t>(node - 1) * p.alpha);
        solver.complete(stripe);
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.k) * p.alpha; ++i)
            store_symbol_le(buf.data() + i * sb, stripe[i], pc.field().width_bits());
        const std::uint64_t take =
            std::min<std::uint64_t>(remaining, stripe_bytes);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(take));
        remaining -= take;
    }
    if (!out)
        throw DataError("decode: failed writing " + output.string());
}

namespace {

// Reads only the planned symbols of one helper shard: consecutive tuple
// indices coalesce into one seek+read.
class PlannedShardReader {
public:
    PlannedShardReader(const fs::path& path, std::vector<std::uint32_t> tuples,
                       const ParityCheck& pc)
        : path_(path), tuples_(std::move(tuples)), alpha_(pc.params().alpha),
          sb_(pc.field().symbol_bytes()), width_(pc.field().width_bits()),
          in_(path, std::ios::binary) {
        if (!in_)
            throw DataError("repair: cannot open " + path.string());
        std::vector<std::uint8_t> head(kShardHeaderSize);
        in_.read(reinterpret_cast<char*>(head.data()), kShardHeaderSize);
        if (!in_)
            throw DataError("repair: " + path.string() + " is truncated");
        header_ = decode_shard_header(head);
        check_header_matches(header_, pc, path);
        const std::uint64_t want =
            kShardHeaderSize +
            static_cast<std::uint64_t>(header_.stripe_count) * alpha_ * sb_;
        if (fs::file_size(path) != want)
            throw DataError("repair: " + path.string() +
                            " size does not match its header");
        for (std::size_t i = 0; i < tuples_.size(); ++i)
            slot_of_tuple_[tuples_[i]] = i;
    }

    const ShardHeader& header() const { return header_; }

    /// Loads the planned symbols of one stripe.
    void load_stripe(std::uint32_t stripe) {
        symbols_.resize(tuples_.size());
        std::vector<std::uint8_t> buf;
        std::size_t i = 0;
        while (i < tuples_.size()) {
            std::size_t run = 1;
            while (i + run < tuples_.size() &&
                   tuples_[i + run] == tuples_[i] + run)
                ++run;
            const std::uint64_t offset =
                kShardHeaderSize +
                (static_cast<std::uint64_t>(stripe) * alpha_ + tuples_[i]) * sb_;
            buf.resize(run * sb_);
            in_.seekg(static_cast<std::streamoff>(offset));
            in_.read(reinterpret_cast<char*>(buf.data()),
                     static_cast<std::streamsize>(buf.size()));
            if (!in_)
                throw DataError("repair: short read from " + path_.string());
            for (std::size_t r = 0; r < run; ++r)
                symbols_[i + r] = load_symbol_le(buf.data() + r * sb_, width_);
            i += run;
        }
    }

    std::optional<gf_elem> symbol(std::uint32_t tuple) const {
        const auto it = slot_of_tuple_.find(tuple);
        if (it == slot_of_tuple_.end())
            return std::nullopt;
        return symbols_[it->second];
    }

private:
    fs::path path_;
    std::vector<std::uint32_t> tuples_;
    std::uint32_t alpha_;
    unsigned sb_;
    unsigned width_;
    std::ifstream in_;
    ShardHeader header_;
    std::map<std::uint32_t, std::size_t> slot_of_tuple_;
    std::vector<gf_elem> symbols_;
};

} // namespace

ShardRepairOutcome repair_shard(const ParityCheck& pc, int failed_index,
                                std::span<const int> helper_indices,
                                const fs::path& shard_dir) {
    const CodeParams& p = pc.params();
    const NodeId failed = node_at(failed_index, p);
    std::vector<NodeId> helpers;
    for (int h : helper_indices)
        helpers.push_back(node_at(h, p));

    const std::vector<FetchRequest> plan = repair_plan(failed, helpers, p);
    std::map<int, std::vector<std::uint32_t>> tuples_by_node;
    for (const FetchRequest& req : plan)
        tuples_by_node[req.node].push_back(req.tuple);

    std::map<int, PlannedShardReader> readers;
    std::optional<ShardHeader> ref;
    for (auto& [node, tuples] : tuples_by_node) {
        auto [it, _] = readers.try_emplace(node, shard_dir / shard_filename(node),
                                           tuples, pc);
        if (it->second.header().node_index != node)
            throw DataError("repair: node index in header does not match filename");
        if (ref && (ref->stripe_count != it->second.header().stripe_count ||
                    ref->original_length != it->second.header().original_length))
            throw DataError("repair: helper shards disagree on stripe count");
        ref = it->second.header();
    }

    const std::uint32_t stripes = ref ? ref->stripe_count : 0;
    std::vector<gf_elem> payload(static_cast<std::size_t>(stripes) * p.alpha);
    BandwidthReport totals;
    for (std::uint32_t st = 0; st < stripes; ++st) {
        for (auto& [node, reader] : readers)
            reader.load_stripe(st);
        const SymbolAccessor fetch = [&](int node, std::uint32_t tuple)
            -> std::optional<gf_elem> {
            const auto it = readers.find(node);
            if (it == readers.end())
                return std::nullopt;
            return it->second.symbol(tuple);
        };
        RepairResult result = repair(failed, helpers, fetch, pc);
        std::copy(result.block.begin(), result.block.end(),
                  payload.begin() + static_cast<std::ptrdiff_t>(st) * p.alpha);
        if (st == 0)
            totals = result.report;
    }
    if (stripes == 0) {
        // Header-only shards: synthesize the per-stripe report.
        RepairSession session(failed, helpers, pc);
        totals = session.report();
    }
    totals.symbols_downloaded *= stripes;
    totals.bytes_downloaded *= stripes;
    totals.naive_bytes *= stripes;

    ShardRepairOutcome outcome;
    outcome.stripes = stripes;
    outcome.path = shard_dir / shard_filename(failed_index);
    write_shard(outcome.path,
                make_header(pc, failed_index, stripes,
                            ref ? ref->original_length : 0),
                payload);
    outcome.report = totals;
    return outcome;
}

} // namespace msr
