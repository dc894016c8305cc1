#pragma once

#include "esp/collision.hpp"
#include "esp/partition.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace esp {

enum class MemoryMode { in_memory, sort_merge };

std::string_view to_string(MemoryMode mode);
MemoryMode parse_memory_mode(std::string_view text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

using FingerprintFn = std::function<std::uint64_t(std::string_view canonical_image)>;

struct VerifyConfig {
  unsigned workers = 1;
  MemoryMode memory_mode = MemoryMode::in_memory;
  /// Budget for the in_memory fingerprint table.
  std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
  /// Records held per sorted run before spilling in sort_merge mode.
  std::size_t run_records = std::size_t{1} << 18;
  /// Directory for sort_merge runs; the system temp directory when empty.
  std::filesystem::path spill_dir;
  /// Also invert every image and record partitions that fail to round-trip.
  bool check_roundtrip = false;
  /// Test hook; fnv1a64 when unset.
  FingerprintFn fingerprint;
};

struct VerificationReport {
  std::uint64_t n = 0;
  std::uint64_t partitions_checked = 0;
  std::uint64_t distinct_images = 0;
  std::vector<CollisionPair> collisions;
  std::vector<Partition> roundtrip_failures;
  std::chrono::milliseconds wall_time{0};
  unsigned workers = 1;

  bool clean() const { return collisions.empty() && roundtrip_failures.empty(); }
};

/// Enumerates every partition of n, groups them by the fingerprint of the
/// canonical pre2 encoding, and resolves shared fingerprints by exact image
/// comparison. Shards by largest part across config.workers threads.
/// Throws ResourceExhausted when in_memory mode exceeds its budget.
VerificationReport verify_injectivity(std::uint64_t n, const VerifyConfig& config = {});

struct SampleAll {};
struct SampleRandom {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using Sample = std::variant<SampleAll, SampleRandom>;

/// `count` distinct partitions of n chosen uniformly from a seeded stream,
/// returned in enumeration order (all of them when count >= p(n)).
std::vector<Partition> sample_partitions(std::uint64_t n, std::uint64_t count,
                                         std::uint64_t seed);

/// Partitions of n for which invert_pre2 or divisor_scan_invert fails to
/// return the partition itself.
std::vector<Partition> roundtrip_check(std::uint64_t n, const Sample& sample = SampleAll{});

/// All pairs of distinct partitions with exactly `length` parts, each at most
/// max_part, that share a pre2 image. Throws ResourceExhausted when the search
/// space exceeds max_candidates.
std::vector<CollisionPair> search_cross_size_collisions(
    std::size_t length, Part max_part, std::uint64_t max_candidates = std::uint64_t{1} << 27);

}  // namespace esp
