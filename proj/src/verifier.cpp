#include "esp/verifier.hpp"

#include "esp/enumeration.hpp"
#include "esp/errors.hpp"
#include "esp/reconstruction.hpp"
#include "esp/text_format.hpp"
#include "external_sort.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

namespace esp {

std::string_view to_string(MemoryMode mode) {
  return mode == MemoryMode::in_memory ? "in_memory" : "sort_merge";
}

MemoryMode parse_memory_mode(std::string_view text) {
  if (text == "in_memory" || text == "in-memory") return MemoryMode::in_memory;
  if (text == "sort_merge" || text == "sort-merge") return MemoryMode::sort_merge;
  throw ParseError("unknown memory mode '" + std::string(text) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string parts_text(const std::vector<Part>& parts) {
  std::string out;
  for (Part p : parts) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(p);
  }
  return out;
}

bool roundtrips(const Partition& lambda) {
  const auto image = pre2(lambda);
  try {
    if (invert_pre2(image, lambda.size()) != lambda) return false;
    if (!image.empty() && divisor_scan_invert(image, lambda.size()) != lambda) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// Exact resolution of one fingerprint bucket. Members are grouped by their
// recomputed BigInt image, never by fingerprint.
struct BucketResolver {
  std::vector<CollisionPair> collisions;
  std::uint64_t merged_away = 0;

  void resolve(const std::vector<std::string>& members) {
    std::map<std::string, std::vector<Partition>> classes;
    for (const auto& text : members) {
      auto lambda = parse_partition(text);
      classes[to_text(pre2(lambda))].push_back(std::move(lambda));
    }
    for (auto& [image, group] : classes) {
      if (group.size() < 2) continue;
      std::sort(group.begin(), group.end(), enumerates_before);
      merged_away += group.size() - 1;
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
          collisions.push_back(CollisionPair::make(group[i], group[j]));
    }
  }
};

template <typename ShardFn>
void run_shards(std::uint64_t shard_count, unsigned workers, ShardFn&& shard_fn) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned worker_id) {
    try {
      for (std::uint64_t s; (s = next++) < shard_count;) shard_fn(worker_id, s);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = shard_count;
    }
  };
  if (workers <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

VerificationReport verify_injectivity(std::uint64_t n, const VerifyConfig& config) {
  if (n == 0) throw std::invalid_argument("verify_injectivity requires n >= 1");
  if (config.workers == 0) throw std::invalid_argument("workers must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  const FingerprintFn fingerprint =
      config.fingerprint ? config.fingerprint : FingerprintFn([](std::string_view s) { return fnv1a64(s); });

  // Shard s enumerates partitions whose largest part is n - s.
  const std::uint64_t shards = n;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, shards));
  std::vector<std::vector<Partition>> shard_failures(shards);

  VerificationReport report;
  report.n = n;
  report.workers = config.workers;
  BucketResolver resolver;

  auto for_each_in_shard = [&](std::uint64_t s, auto&& visit) {
    auto stream = PartitionStream::with_largest_part(n, n - s);
    for (; !stream.done(); stream.advance()) {
      const auto& parts = stream.current();
      auto lambda = Partition::from_canonical(parts);
      if (config.check_roundtrip && !roundtrips(lambda)) shard_failures[s].push_back(lambda);
      visit(fingerprint(pre2_encoding(lambda)), parts_text(parts));
    }
  };

  if (config.memory_mode == MemoryMode::in_memory) {
    struct Record {
      std::uint64_t fingerprint;
      std::string partition;
    };
    constexpr std::uint64_t kRecordOverhead = sizeof(Record) + 32;
    std::vector<std::vector<Record>> shard_records(shards);
    std::atomic<std::uint64_t> bytes{0};
    run_shards(shards, workers, [&](unsigned, std::uint64_t s) {
      for_each_in_shard(s, [&](std::uint64_t fp, std::string text) {
        if (bytes.fetch_add(text.size() + kRecordOverhead) > config.memory_budget_bytes)
          throw ResourceExhausted("in_memory table exceeds the budget of " +
                                  std::to_string(config.memory_budget_bytes) +
                                  " bytes; retry with sort_merge");
        shard_records[s].push_back({fp, std::move(text)});
      });
    });

    // Single-writer merge in shard order.
    std::unordered_map<std::uint64_t, std::uint64_t> first_seen;
    std::map<std::uint64_t, std::vector<std::string>> suspects;
    std::vector<std::string*> by_index;
    for (auto& records : shard_records) {
      for (auto& r : records) {
        ++report.partitions_checked;
        auto [it, inserted] = first_seen.try_emplace(r.fingerprint, by_index.size());
        by_index.push_back(&r.partition);
        if (inserted) continue;
        auto& bucket = suspects[r.fingerprint];
        if (bucket.empty()) bucket.push_back(*by_index[it->second]);
        bucket.push_back(r.partition);
      }
    }
    for (const auto& [fp, members] : suspects) resolver.resolve(members);
  } else {
    detail::SpillDirectory spill(config.spill_dir);
    std::vector<std::vector<std::filesystem::path>> shard_runs(shards);
    run_shards(shards, workers, [&](unsigned, std::uint64_t s) {
      detail::RunWriter writer(spill.path(), "shard-" + std::to_string(s), config.run_records);
      for_each_in_shard(s, [&](std::uint64_t fp, std::string text) { writer.add(fp, std::move(text)); });
      shard_runs[s] = writer.finish();
    });
    std::vector<std::filesystem::path> runs;
    for (auto& r : shard_runs) runs.insert(runs.end(), r.begin(), r.end());
    report.partitions_checked = detail::merge_runs(runs, [&](std::uint64_t, std::vector<std::string>& group) {
      if (group.size() >= 2) resolver.resolve(group);
    });
  }

  std::sort(resolver.collisions.begin(), resolver.collisions.end(), collision_less);
  report.collisions = std::move(resolver.collisions);
  report.distinct_images = report.partitions_checked - resolver.merged_away;
  for (auto& f : shard_failures)
    report.roundtrip_failures.insert(report.roundtrip_failures.end(), f.begin(), f.end());
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<Partition> sample_partitions(std::uint64_t n, std::uint64_t count, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_partitions requires n >= 1");
  const auto total = to_u64(count_partitions(n));
  if (!total) throw std::overflow_error("p(" + std::to_string(n) + ") exceeds 64 bits");
  if (count >= *total) return enumerate_partitions(n);

  // Floyd's algorithm: `count` distinct indices in [0, total).
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = *total - count; j < *total; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Partition> out;
  out.reserve(count);
  for (std::uint64_t index : chosen) out.push_back(unrank_partition(n, index));
  return out;
}

std::vector<Partition> roundtrip_check(std::uint64_t n, const Sample& sample) {
  if (n == 0) throw std::invalid_argument("roundtrip_check requires n >= 1");
  std::vector<Partition> failures;
  auto check = [&](const Partition& lambda) {
    if (!roundtrips(lambda)) failures.push_back(lambda);
  };
  if (std::holds_alternative<SampleAll>(sample)) {
    PartitionStream stream(n);
    while (auto lambda = stream.next()) check(*lambda);
  } else {
    const auto& random = std::get<SampleRandom>(sample);
    for (const auto& lambda : sample_partitions(n, random.count, random.seed)) check(lambda);
  }
  return failures;
}

}  // namespace esp
