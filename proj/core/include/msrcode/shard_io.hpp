#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "msrcode/codec.hpp"
#include "msrcode/repair.hpp"

namespace msr {

/// Shard file layout: 26-byte header followed by stripe_count * alpha
/// little-endian symbols (stripe-major: all of stripe 0's symbols for this
/// node, then stripe 1's, ...).
///
///   offset  size  field
///        0     4  magic "MSR1"
///        4     1  format version (1)
///        5     2  node index, 1-based, LE
///        7     2  n, LE
///        9     2  k, LE
///       11     2  d, LE
///       13     1  field width in bits
///       14     4  stripe count, LE
///       18     8  original file length in bytes, LE
struct ShardHeader {
    std::uint16_t node_index = 0;
    std::uint16_t n = 0;
    std::uint16_t k = 0;
    std::uint16_t d = 0;
    std::uint8_t field_width = 0;
    std::uint32_t stripe_count = 0;
    std::uint64_t original_length = 0;

    bool operator==(const ShardHeader&) const = default;
};

inline constexpr std::array<std::uint8_t, 4> kShardMagic = {'M', 'S', 'R', '1'};
inline constexpr std::uint8_t kShardFormatVersion = 1;
inline constexpr std::size_t kShardHeaderSize = 26;

std::array<std::uint8_t, kShardHeaderSize> encode_shard_header(const ShardHeader& h);
/// Throws DataError on bad magic or unsupported version.
ShardHeader decode_shard_header(std::span<const std::uint8_t> bytes);

/// "shard_007.msr" for node 7.
std::string shard_filename(int node_index);

struct Shard {
    ShardHeader header;
    std::vector<gf_elem> payload;  // stripe_count * alpha symbols
};

void write_shard(const std::filesystem::path& path, const ShardHeader& header,
                 std::span<const gf_elem> payload);
/// Reads and validates header and payload length.
Shard read_shard(const std::filesystem::path& path);

/// Split a file into n shards under out_dir; the input is zero-padded to a
/// whole number of stripes of k*alpha symbols. Returns the shard paths in
/// node order.
std::vector<std::filesystem::path> encode_file(const ParityCheck& pc,
                                               const std::filesystem::path& input,
                                               const std::filesystem::path& out_dir);

/// Rebuild the original file from the shards in shard_dir. use_nodes
/// selects specific shards (>= k of them); empty means every readable
/// shard in the directory. Extra shards beyond k feed the corruption
/// check.
void decode_file(const ParityCheck& pc, const std::filesystem::path& shard_dir,
                 const std::filesystem::path& output,
                 std::span<const int> use_nodes = {});

struct ShardRepairOutcome {
    std::filesystem::path path;
    std::uint32_t stripes = 0;
    BandwidthReport report;  // totals across all stripes
};

/// Regenerate the failed node's shard from exactly d helper shards,
/// reading only the beta planned symbols per stripe per helper.
ShardRepairOutcome repair_shard(const ParityCheck& pc, int failed_index,
                                std::span<const int> helper_indices,
                                const std::filesystem::path& shard_dir);

} // namespace msr
