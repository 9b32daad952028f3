#ifndef SIMPERM_ORACLE_HPP
#define SIMPERM_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simperm/permutation.hpp"

namespace simperm {

inline constexpr int kOracleCostBound = 10;

struct OracleOptions {
  /// Allow degrees above kOracleCostBound; (n-1)! grows very quickly.
  bool override_cost_bound = false;
  /// Worker threads for the scan; 1 keeps it on the calling thread.
  unsigned threads = 1;
};

/// Every full n-cycle accepted by the recognizer for its degree class, found
/// by exhaustive scan. Sorted by image sequence.
/// Throws CostBoundError for n > 10 unless overridden.
std::vector<Permutation> brute_force_simple(int n, const OracleOptions& options = {});

/// Number of full cycles of degree n, (n-1)!.
std::uint64_t full_cycle_count(int n);

struct OracleReport {
  int degree = 0;
  std::uint64_t candidates_scanned = 0;
  bool scanned = false;
  std::vector<std::string> found;
  /// "stefan", "genealogy", "mixed", or "none".
  std::string source = "none";
  std::vector<std::string> constructive;
  /// Every constructive entry passes its recognizer.
  bool sound = true;
  /// Set equality of scan and constructive source; empty when either is missing.
  std::optional<bool> agreement;
  std::vector<std::string> missing;  // scanned but not constructed
  std::vector<std::string> extra;    // constructed but not scanned
  std::chrono::milliseconds elapsed{0};

  bool completeness_verified() const { return scanned && agreement.value_or(false); }
  bool ok() const { return sound && agreement.value_or(true); }
};

/// Scans (when within the cost bound) and compares against the constructive
/// source for the degree: Stefan pair, genealogy level, or enumerate_mixed.
OracleReport cross_check(int n, const OracleOptions& options = {});

/// Deterministic serialization; elapsed time is left out.
nlohmann::ordered_json to_json(const OracleReport& report);

}  // namespace simperm

#endif  // SIMPERM_ORACLE_HPP
