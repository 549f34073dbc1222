#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/module.hpp"

namespace syzlab {

inline constexpr int kDefaultResolutionBound = 10;

/// Truncated graded free resolution  F_L -> ... -> F_1 -> F_0 -> M.
/// differential(i) maps F_i to F_{i-1}; differential(1) is a minimal
/// presentation of M.
class Resolution {
 public:
  Resolution(PresentedModule presentation, std::vector<Matrix> differentials);

  const RingPtr& ring() const { return presentation_.ring(); }
  /// Minimal presentation of the resolved module.
  const PresentedModule& presentation() const { return presentation_; }
  int length() const { return static_cast<int>(differentials_.size()); }
  const Matrix& differential(int i) const;
  /// Twists of F_i, 0 <= i <= length.
  const std::vector<int>& free_degrees(int i) const;
  std::size_t rank(int i) const { return free_degrees(i).size(); }
  /// Some F_i with i <= length vanishes, so every later one does too.
  bool complete() const;
  /// Index of the last nonzero F_i when complete.
  std::optional<int> projective_dimension() const;

  bool is_minimal() const;
  /// differential(i) * differential(i + 1) == 0 for every computed pair.
  bool is_complex() const;

  Resolution truncated(int length) const;
  /// Computes further steps; returns *this unchanged if already long enough.
  Resolution extended(int length) const;
  Resolution rebind(const RingPtr& ring) const;

 private:
  PresentedModule presentation_;
  std::vector<Matrix> differentials_;
};

struct BettiTable {
  /// (i, j) -> beta_{i,j}; zero entries omitted.
  std::map<std::pair<int, int>, std::int64_t> entries;
  int length = 0;

  std::int64_t at(int i, int j) const;
  std::int64_t total(int i) const;
  std::vector<std::int64_t> totals() const;
  bool operator==(const BettiTable& other) const { return length == other.length && entries == other.entries; }
};

/// Content-addressed memo for resolutions, optionally persisted on disk.
/// Safe to share between threads; insertions are idempotent.
class ResolutionCache {
 public:
  ResolutionCache() = default;
  explicit ResolutionCache(std::filesystem::path directory);

  /// Longest memoized resolution for key, or the on-disk entry of exactly
  /// this length.
  std::optional<Resolution> lookup(const RingPtr& ring, const std::string& key, int length);
  void store(const std::string& key, const Resolution& res);

  std::uint64_t hits() const;
  std::uint64_t misses() const;
  const std::optional<std::filesystem::path>& directory() const { return directory_; }

 private:
  std::optional<std::filesystem::path> directory_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Resolution>> memory_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

/// Deterministic text form of a module presentation, used in cache keys.
std::string canonical_form(const PresentedModule& m);
std::string sha256_hex(const std::string& data);

/// Binary cache entry: "SYZR", version byte, key, payload, SHA-256 trailer.
std::string serialize_resolution(const std::string& key, const Resolution& res);
/// nullopt on any corruption or key mismatch.
std::optional<Resolution> deserialize_resolution(const RingPtr& ring, const std::string& key,
                                                 const std::string& bytes);

Resolution minimal_resolution(const PresentedModule& m, int length = kDefaultResolutionBound);
/// Throws UsageError if the resolution is not minimal.
BettiTable betti_table(const Resolution& res);
/// Image of the n-th differential, presented on F_n by differential(n + 1).
PresentedModule syzygy_module(const PresentedModule& m, int n);
/// Cokernel of the dual of a minimal presentation.
PresentedModule transpose(const PresentedModule& m);

}  // namespace syzlab
