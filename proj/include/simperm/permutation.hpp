#ifndef SIMPERM_PERMUTATION_HPP
#define SIMPERM_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simperm {

/// A bijection of {1..n} in one-line notation.
///
/// Points and images are 1-based everywhere. Every constructor validates
/// bijectivity, so a Permutation value is always a valid element of S_n.
class Permutation {
 public:
  /// Throws NotAPermutation unless `images` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point `i`. Unchecked.
  int operator()(int i) const noexcept { return images_[i - 1]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// An orbit written as a sequence of distinct points.
///
/// The written order is kept, since pasting is sensitive to it; equality and
/// ordering use the rotation with the minimum point first.
class Cycle {
 public:
  /// Throws std::invalid_argument on an empty sequence, non-positive or repeated points.
  explicit Cycle(std::vector<int> points);

  std::span<const int> points() const noexcept { return points_; }
  int length() const noexcept { return static_cast<int>(points_.size()); }
  std::vector<int> canonical() const;
  int min_point() const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.canonical() == b.canonical(); }
  friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
    return a.canonical() <=> b.canonical();
  }

 private:
  std::vector<int> points_;
};

/// Disjoint cycles covering {1..n}, ordered by their minimum point.
class CycleDecomposition {
 public:
  /// Throws std::invalid_argument unless the cycles partition {1..degree}.
  CycleDecomposition(int degree, std::vector<Cycle> cycles);

  int degree() const noexcept { return degree_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t size() const noexcept { return cycles_.size(); }

  Permutation to_permutation() const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

 private:
  int degree_;
  std::vector<Cycle> cycles_;
};

/// (p ∘ q)(i) = p(q(i)). Throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t k);

/// Least k >= 1 with p^k = id (lcm of the cycle lengths).
std::uint64_t order_of(const Permutation& p);

CycleDecomposition cycle_decomposition(const Permutation& p);
bool is_full_cycle(const Permutation& p);

/// Concatenation (u, v) of two disjoint cycles. Throws DisjointnessError on overlap.
Cycle paste_cycles(const Cycle& u, const Cycle& v);
Cycle reverse_cycle(const Cycle& u);

/// Left pasting: a's images shifted up by deg(b), followed by b's images.
Permutation paste_left(const Permutation& a, const Permutation& b);
/// Right pasting: a's images, followed by b's images shifted up by deg(a).
Permutation paste_right(const Permutation& a, const Permutation& b);
/// Image sequence read backwards: result(i) = a(m + 1 - i).
Permutation reverse_perm(const Permutation& a);

/// Comma form, e.g. "6,4,5,1,2,3".
std::string to_string(const Permutation& p);
/// Canonical parenthesized form, e.g. "(1,6,3,5,2,4)".
std::string to_string(const Cycle& c);
std::string to_string(const CycleDecomposition& d);

/// Parses the comma form; whitespace is ignored.
/// Throws ParseError naming the offending token, NotAPermutation on non-bijections.
Permutation parse_permutation(std::string_view text);
/// Parses "(1,6,3)"; throws ParseError on malformed input.
Cycle parse_cycle(std::string_view text);

}  // namespace simperm

#endif  // SIMPERM_PERMUTATION_HPP
