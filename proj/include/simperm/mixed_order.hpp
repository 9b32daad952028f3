#ifndef SIMPERM_MIXED_ORDER_HPP
#define SIMPERM_MIXED_ORDER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simperm/permutation.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {

/// One of the four right pastings of Stefan orbits that can be theta^2 for a
/// simple permutation theta of order 2r.
struct ThetaSquareClass {
  StefanVariant left;
  StefanVariant right;
  int odd_part;
  Permutation square;

  /// "alpha|beta"
  std::string label() const;
  /// "alphabeta", as used in record names.
  std::string tag() const;
};

/// Classes in the fixed order alpha|alpha, beta|beta, alpha|beta, beta|alpha.
/// Throws DomainError unless r is odd and >= 3.
std::array<ThetaSquareClass, 4> theta_square_classes(int r);

/// The unique theta with theta(1) = k and theta ∘ theta = sigma, obtained by
/// threading the orbit 1 -> k -> sigma(1) -> sigma(k) -> sigma^2(1) -> ...
///
/// sigma must have degree 2r and leave both halves invariant; k must lie in
/// the second half (DomainError otherwise). Throws ConsistencyError if the
/// orbit closes before covering every point.
Permutation thread(const Permutation& sigma, int k);

struct MixedPermutation {
  ThetaSquareClass square_class;
  int first_image;
  Permutation perm;

  /// "theta_alphaalpha_6"
  std::string name() const;
};

/// All thread(sigma, k) of degree 4n+2, ordered by class then k ascending.
/// Every result is checked with is_simple_mixed; a failure throws ConsistencyError.
std::vector<MixedPermutation> enumerate_mixed(int n);

/// alpha|◊Id, beta|◊Id, Id|◊alpha, Id|◊beta at odd order r >= 3.
std::array<Permutation, 4> identity_paste_family(int r);

/// Square class and first image of a simple permutation of order 4n+2.
std::optional<MixedPermutation> identify_mixed(const Permutation& p);

/// {"name", "order", "images", "square_class", "first_image"}
nlohmann::ordered_json to_json(const MixedPermutation& m);

}  // namespace simperm

#endif  // SIMPERM_MIXED_ORDER_HPP
