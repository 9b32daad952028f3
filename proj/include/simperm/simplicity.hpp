#ifndef SIMPERM_SIMPLICITY_HPP
#define SIMPERM_SIMPLICITY_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "simperm/permutation.hpp"

namespace simperm {

enum class StefanVariant { Alpha, Beta };

std::string_view to_string(StefanVariant v) noexcept;

/// The j-th of k consecutive equal blocks of {1..n}: {(j-1)n/k + 1, ..., j n/k}.
struct Block {
  int first;
  int last;

  int size() const noexcept { return last - first + 1; }
  bool contains(int x) const noexcept { return first <= x && x <= last; }
  std::vector<int> points() const;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Throws DomainError unless k divides n and 1 <= j <= k.
Block block(int n, int k, int j);

/// p restricted to an invariant block and renumbered to {1..size} by the
/// order-preserving bijection. nullopt when p does not map the block onto itself.
std::optional<Permutation> restrict_to_block(const Permutation& p, Block b);

/// Stefan orbit of odd degree m >= 3, built from its two-row form.
Permutation stefan(int m, StefanVariant variant);

/// Which Stefan orbit p is, if any.
std::optional<StefanVariant> stefan_variant(const Permutation& p);

bool is_simple_odd(const Permutation& p);

/// Degree 2^k with either k = 0, or p swapping the two halves setwise and p^2
/// restricted to each half being simple of degree 2^(k-1).
bool is_simple_pow2(const Permutation& p);

/// Degree r 2^m, r odd >= 3, m >= 1: p permutes the 2^m blocks of size r by a
/// simple permutation, and p^(2^m) restricted to every block is a Stefan orbit.
bool is_simple_mixed(const Permutation& p);

struct MixedDegree {
  int odd_part;
  int exponent;
};

/// r and m with n = r 2^m, r odd >= 3, m >= 1; nullopt for other degrees.
std::optional<MixedDegree> mixed_degree(int n) noexcept;

/// log2(n) for powers of two, nullopt otherwise.
std::optional<int> pow2_exponent(long long n) noexcept;

struct OddStefan {
  StefanVariant variant;
  friend bool operator==(const OddStefan&, const OddStefan&) = default;
};
struct PowerOfTwo {
  int exponent;
  friend bool operator==(const PowerOfTwo&, const PowerOfTwo&) = default;
};
struct Mixed {
  int odd_part;
  int exponent;
  friend bool operator==(const Mixed&, const Mixed&) = default;
};
struct NotSimple {
  friend bool operator==(const NotSimple&, const NotSimple&) = default;
};

using SimplicityClass = std::variant<OddStefan, PowerOfTwo, Mixed, NotSimple>;

/// Dispatches on the degree; non-cycles are NotSimple.
SimplicityClass classify_simple(const Permutation& p);

inline bool is_simple(const SimplicityClass& c) { return !std::holds_alternative<NotSimple>(c); }

/// {"class": "odd", "variant": "alpha"}, {"class": "pow2", "exponent": 2},
/// {"class": "mixed", "r": 3, "m": 1} or {"class": "none"}.
nlohmann::ordered_json to_json(const SimplicityClass& c);

}  // namespace simperm

#endif  // SIMPERM_SIMPLICITY_HPP
