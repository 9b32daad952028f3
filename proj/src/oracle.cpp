#include "simperm/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "simperm/error.hpp"
#include "simperm/genealogy.hpp"
#include "simperm/mixed_order.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {

namespace {

// Full cycles (1, first, rest...) with a fixed successor of 1.
std::pair<std::vector<Permutation>, std::uint64_t> scan_partition(int n, int first) {
  std::vector<int> rest;
  for (int x = 2; x <= n; ++x)
    if (x != first) rest.push_back(x);
  std::vector<Permutation> hits;
  std::uint64_t scanned = 0;
  std::vector<int> images(n);
  do {
    int from = 1;
    int to = first;
    for (int x : rest) {
      images[from - 1] = to;
      from = to;
      to = x;
    }
    images[from - 1] = to;
    images[to - 1] = 1;
    ++scanned;
    Permutation candidate(images);
    if (is_simple(classify_simple(candidate))) hits.push_back(std::move(candidate));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {std::move(hits), scanned};
}

std::vector<std::string> texts(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  for (const auto& p : perms) out.push_back(to_string(p));
  return out;
}

}  // namespace

std::uint64_t full_cycle_count(int n) {
  std::uint64_t count = 1;
  for (int k = 2; k < n; ++k) count *= static_cast<std::uint64_t>(k);
  return count;
}

std::vector<Permutation> brute_force_simple(int n, const OracleOptions& options) {
  if (n < 1) throw DomainError("brute_force_simple: degree must be >= 1");
  if (n > kOracleCostBound && !options.override_cost_bound)
    throw CostBoundError("brute_force_simple: degree " + std::to_string(n) + " exceeds the cost bound " +
                         std::to_string(kOracleCostBound) + " ((n-1)! candidates); pass the override to force it");
  if (n == 1) return {Permutation::identity(1)};

  std::vector<Permutation> hits;
  std::uint64_t scanned = 0;
  auto merge = [&](std::pair<std::vector<Permutation>, std::uint64_t> part) {
    hits.insert(hits.end(), std::make_move_iterator(part.first.begin()), std::make_move_iterator(part.first.end()));
    scanned += part.second;
  };
  if (options.threads <= 1) {
    for (int first = 2; first <= n; ++first) merge(scan_partition(n, first));
  } else {
    std::vector<std::future<std::pair<std::vector<Permutation>, std::uint64_t>>> pending;
    for (int first = 2; first <= n; ++first) {
      if (pending.size() >= options.threads) {
        merge(pending.front().get());
        pending.erase(pending.begin());
      }
      pending.push_back(std::async(std::launch::async, scan_partition, n, first));
    }
    for (auto& f : pending) merge(f.get());
  }
  if (scanned != full_cycle_count(n))
    throw ConsistencyError("brute_force_simple: scanned " + std::to_string(scanned) + " candidates, expected " +
                           std::to_string(full_cycle_count(n)));
  std::sort(hits.begin(), hits.end());
  return hits;
}

OracleReport cross_check(int n, const OracleOptions& options) {
  if (n < 1) throw DomainError("cross_check: degree must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  OracleReport report;
  report.degree = n;

  std::vector<Permutation> constructive;
  bool have_source = true;
  if (auto k = pow2_exponent(n); k && *k <= 4) {
    report.source = "genealogy";
    constructive = genealogy_tree(*k).levels.back();
  } else if (n % 2 == 1 && n >= 3) {
    report.source = "stefan";
    constructive = {stefan(n, StefanVariant::Alpha), stefan(n, StefanVariant::Beta)};
  } else if (n % 4 == 2 && n >= 6) {
    report.source = "mixed";
    for (auto& m : enumerate_mixed((n - 2) / 4)) constructive.push_back(std::move(m.perm));
  } else {
    have_source = false;
  }
  std::sort(constructive.begin(), constructive.end());
  report.constructive = texts(constructive);
  report.sound = std::all_of(constructive.begin(), constructive.end(),
                             [](const Permutation& p) { return is_simple(classify_simple(p)); });

  if (n <= kOracleCostBound || options.override_cost_bound) {
    const auto found = brute_force_simple(n, options);
    report.scanned = true;
    report.candidates_scanned = full_cycle_count(n);
    report.found = texts(found);
    if (have_source) {
      std::vector<Permutation> missing, extra;
      std::set_difference(found.begin(), found.end(), constructive.begin(), constructive.end(),
                          std::back_inserter(missing));
      std::set_difference(constructive.begin(), constructive.end(), found.begin(), found.end(),
                          std::back_inserter(extra));
      report.missing = texts(missing);
      report.extra = texts(extra);
      report.agreement = missing.empty() && extra.empty();
    }
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

nlohmann::ordered_json to_json(const OracleReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["candidates_scanned"] = report.candidates_scanned;
  j["found_count"] = report.found.size();
  j["found"] = report.found;
  j["source"] = report.source;
  j["constructive_count"] = report.constructive.size();
  j["sound"] = report.sound;
  if (report.agreement)
    j["agreement"] = *report.agreement;
  else
    j["agreement"] = nullptr;
  j["missing"] = report.missing;
  j["extra"] = report.extra;
  j["completeness"] = report.completeness_verified() ? "verified" : "unverified";
  return j;
}

}  // namespace simperm
