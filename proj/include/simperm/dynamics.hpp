#ifndef SIMPERM_DYNAMICS_HPP
#define SIMPERM_DYNAMICS_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "simperm/permutation.hpp"

namespace simperm {

using Rational = boost::multiprecision::cpp_rational;

/// m = 2^exponent * odd_part with odd_part odd.
struct SharkovskiiKey {
  int exponent;
  std::uint64_t odd_part;

  friend bool operator==(const SharkovskiiKey&, const SharkovskiiKey&) = default;
};

SharkovskiiKey sharkovskii_key(std::uint64_t m);

/// Sharkovskii order 3 < 5 < 7 < ... < 2*3 < 2*5 < ... < 2^2*3 < ... < 8 < 4 < 2 < 1.
/// `less` means a precedes b (a period-a orbit forces period b).
/// Throws DomainError if either argument is 0.
std::strong_ordering sharkovskii_cmp(std::uint64_t a, std::uint64_t b);

inline bool sharkovskii_precedes(std::uint64_t a, std::uint64_t b) { return sharkovskii_cmp(a, b) < 0; }

/// Covering graph on the gap intervals I_i = [i, i+1], i = 1..n-1: I_i -> I_j
/// iff the interval spanned by p(i), p(i+1) contains I_j.
class MarkovGraph {
 public:
  MarkovGraph(int vertex_count, std::vector<std::vector<int>> adjacency);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Successors of vertex i (1-based), ascending.
  const std::vector<int>& successors(int i) const { return adjacency_[i - 1]; }
  bool has_edge(int from, int to) const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const MarkovGraph&, const MarkovGraph&) = default;

 private:
  int vertex_count_;
  std::vector<std::vector<int>> adjacency_;
};

/// Throws PreconditionError unless p is a full cycle of degree >= 2.
MarkovGraph markov_graph(const Permutation& p);

/// The connect-the-dots map of p on [1, n], evaluated exactly.
/// Throws DomainError for x outside [1, n].
Rational connect_the_dots(const Permutation& p, const Rational& x);

/// Least k in 1..limit with f^k(x) = x under connect_the_dots; 0 if none.
int minimal_period(const Permutation& p, const Rational& x, int limit);

struct PeriodSet {
  int order = 0;
  int max_period = 0;
  std::set<int> present;

  std::vector<int> absent() const;
  bool contains(int m) const { return present.count(m) != 0; }
};

inline constexpr int kMaxPeriodBound = 12;

/// Least periods m <= max_period of the periodic points of the connect-the-dots
/// map of p, located exactly on each closed itinerary of gap intervals.
/// Requires a full cycle and 1 <= max_period <= 12.
PeriodSet forced_periods(const Permutation& p, int max_period);

struct LoopPeriods {
  /// Lengths of closed walks.
  std::set<int> raw;
  /// Lengths of closed walks that are not a power of a shorter closed walk.
  std::set<int> primitive;
};

/// Requires 0 <= max_len <= 12.
LoopPeriods loop_periods(const MarkovGraph& g, int max_len);

/// Vertices labelled "I1".."I(n-1)".
std::string to_dot(const MarkovGraph& g);
/// {"vertices": [...], "adjacency": {"I1": [...], ...}}
nlohmann::ordered_json to_json(const MarkovGraph& g);
/// {"order": d, "max": M, "present": [...], "absent": [...]}
nlohmann::ordered_json to_json(const PeriodSet& s);
nlohmann::ordered_json to_json(const LoopPeriods& l);

}  // namespace simperm

#endif  // SIMPERM_DYNAMICS_HPP
