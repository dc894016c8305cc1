#pragma once

// Sorted on-disk runs of (fingerprint, partition text) records and their
// k-way merge.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace esp::detail {

struct FingerprintRecord {
  std::uint64_t fingerprint = 0;
  std::string partition;

  friend auto operator<=>(const FingerprintRecord&, const FingerprintRecord&) = default;
};

/// Owns a fresh directory and removes it on destruction.
class SpillDirectory {
 public:
  explicit SpillDirectory(const std::filesystem::path& parent);
  ~SpillDirectory();
  SpillDirectory(const SpillDirectory&) = delete;
  SpillDirectory& operator=(const SpillDirectory&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Buffers records and writes each full buffer as one sorted run file.
class RunWriter {
 public:
  RunWriter(std::filesystem::path directory, std::string stem, std::size_t run_records);

  void add(std::uint64_t fingerprint, std::string partition);
  /// Writes any buffered records; returns every run written so far.
  std::vector<std::filesystem::path> finish();

 private:
  void spill();

  std::filesystem::path directory_;
  std::string stem_;
  std::size_t run_records_;
  std::vector<FingerprintRecord> buffer_;
  std::vector<std::filesystem::path> runs_;
};

/// Merges sorted runs in (fingerprint, partition) order and calls `on_group`
/// once per distinct fingerprint with every partition text carrying it.
/// Returns the total record count.
std::uint64_t merge_runs(const std::vector<std::filesystem::path>& runs,
                         const std::function<void(std::uint64_t, std::vector<std::string>&)>& on_group);

}  // namespace esp::detail
