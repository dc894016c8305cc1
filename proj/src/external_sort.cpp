#include "external_sort.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <queue>
#include <random>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace esp::detail {

namespace {

void write_record(std::ofstream& out, const FingerprintRecord& r) {
  const auto len = static_cast<std::uint32_t>(r.partition.size());
  out.write(reinterpret_cast<const char*>(&r.fingerprint), sizeof r.fingerprint);
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(r.partition.data(), len);
}

bool read_record(std::ifstream& in, FingerprintRecord& r) {
  std::uint32_t len = 0;
  if (!in.read(reinterpret_cast<char*>(&r.fingerprint), sizeof r.fingerprint)) return false;
  if (!in.read(reinterpret_cast<char*>(&len), sizeof len)) throw std::runtime_error("truncated run file");
  r.partition.resize(len);
  if (!in.read(r.partition.data(), len)) throw std::runtime_error("truncated run file");
  return true;
}

}  // namespace

SpillDirectory::SpillDirectory(const std::filesystem::path& parent) {
  static std::atomic<std::uint64_t> counter{0};
  const auto base = parent.empty() ? std::filesystem::temp_directory_path() : parent;
  std::random_device rd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto candidate = base / ("esp-spill-" + std::to_string(::getpid()) + "-" +
                             std::to_string(counter++) + "-" + std::to_string(rd()));
    if (std::filesystem::create_directories(candidate)) {
      path_ = std::move(candidate);
      return;
    }
  }
  throw std::runtime_error("could not create a spill directory under " + base.string());
}

SpillDirectory::~SpillDirectory() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

RunWriter::RunWriter(std::filesystem::path directory, std::string stem, std::size_t run_records)
    : directory_(std::move(directory)), stem_(std::move(stem)), run_records_(std::max<std::size_t>(run_records, 1)) {}

void RunWriter::add(std::uint64_t fingerprint, std::string partition) {
  buffer_.push_back({fingerprint, std::move(partition)});
  if (buffer_.size() >= run_records_) spill();
}

void RunWriter::spill() {
  if (buffer_.empty()) return;
  std::sort(buffer_.begin(), buffer_.end());
  auto path = directory_ / (stem_ + "-" + std::to_string(runs_.size()) + ".run");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open run file " + path.string());
  for (const auto& r : buffer_) write_record(out, r);
  out.close();
  if (!out) throw std::runtime_error("failed writing run file " + path.string());
  runs_.push_back(std::move(path));
  buffer_.clear();
}

std::vector<std::filesystem::path> RunWriter::finish() {
  spill();
  return runs_;
}

std::uint64_t merge_runs(const std::vector<std::filesystem::path>& runs,
                         const std::function<void(std::uint64_t, std::vector<std::string>&)>& on_group) {
  std::vector<std::ifstream> inputs;
  inputs.reserve(runs.size());
  for (const auto& path : runs) {
    inputs.emplace_back(path, std::ios::binary);
    if (!inputs.back()) throw std::runtime_error("cannot open run file " + path.string());
  }

  struct Head {
    FingerprintRecord record;
    std::size_t source;
  };
  auto greater = [](const Head& a, const Head& b) {
    if (a.record != b.record) return a.record > b.record;
    return a.source > b.source;
  };
  std::priority_queue<Head, std::vector<Head>, decltype(greater)> heap(greater);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Head h{{}, i};
    if (read_record(inputs[i], h.record)) heap.push(std::move(h));
  }

  std::uint64_t total = 0;
  std::vector<std::string> group;
  std::uint64_t group_fp = 0;
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    ++total;
    if (!group.empty() && h.record.fingerprint != group_fp) {
      on_group(group_fp, group);
      group.clear();
    }
    group_fp = h.record.fingerprint;
    group.push_back(std::move(h.record.partition));
    Head refill{{}, h.source};
    if (read_record(inputs[h.source], refill.record)) heap.push(std::move(refill));
  }
  if (!group.empty()) on_group(group_fp, group);
  return total;
}

}  // namespace esp::detail
