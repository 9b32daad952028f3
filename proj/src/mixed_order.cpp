#include "simperm/mixed_order.hpp"

#include <algorithm>

#include "simperm/error.hpp"

namespace simperm {

namespace {

void require_odd_order(int r, const char* op) {
  if (r < 3 || r % 2 == 0)
    throw DomainError(std::string(op) + ": odd order >= 3 required, got " + std::to_string(r));
}

ThetaSquareClass make_class(StefanVariant left, StefanVariant right, int r) {
  return ThetaSquareClass{left, right, r, paste_right(stefan(r, left), stefan(r, right))};
}

}  // namespace

std::string ThetaSquareClass::label() const {
  return std::string(to_string(left)) + "|" + std::string(to_string(right));
}

std::string ThetaSquareClass::tag() const {
  return std::string(to_string(left)) + std::string(to_string(right));
}

std::array<ThetaSquareClass, 4> theta_square_classes(int r) {
  require_odd_order(r, "theta_square_classes");
  using enum StefanVariant;
  return {make_class(Alpha, Alpha, r), make_class(Beta, Beta, r), make_class(Alpha, Beta, r),
          make_class(Beta, Alpha, r)};
}

Permutation thread(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  if (n % 2 != 0) throw PreconditionError("thread: square must have even degree, got " + std::to_string(n));
  const int r = n / 2;
  if (k <= r || k > n)
    throw DomainError("thread: first image " + std::to_string(k) + " outside " + std::to_string(r + 1) + ".." +
                      std::to_string(n));
  for (int i = 1; i <= n; ++i)
    if ((i <= r) != (sigma(i) <= r))
      throw PreconditionError("thread: " + to_string(sigma) + " does not preserve both halves");

  std::vector<int> images(n, 0);
  int x = 1;
  int y = k;
  int assigned = 0;
  while (images[x - 1] == 0) {
    images[x - 1] = y;
    ++assigned;
    const int next = sigma(x);
    x = y;
    y = next;
  }
  if (assigned != n)
    throw ConsistencyError("thread: orbit of 1 closed after " + std::to_string(assigned) + " of " +
                           std::to_string(n) + " points; " + to_string(sigma) + " is not a valid square");
  Permutation theta(std::move(images));
  if (compose(theta, theta) != sigma)
    throw ConsistencyError("thread: reconstructed " + to_string(theta) + " does not square to " + to_string(sigma));
  return theta;
}

std::string MixedPermutation::name() const {
  return "theta_" + square_class.tag() + "_" + std::to_string(first_image);
}

std::vector<MixedPermutation> enumerate_mixed(int n) {
  if (n < 1) throw DomainError("enumerate_mixed: n must be >= 1");
  const int r = 2 * n + 1;
  std::vector<MixedPermutation> out;
  out.reserve(4 * r);
  for (const auto& cls : theta_square_classes(r)) {
    for (int k = r + 1; k <= 2 * r; ++k) {
      auto theta = thread(cls.square, k);
      if (!is_simple_mixed(theta))
        throw ConsistencyError("enumerate_mixed: constructed " + to_string(theta) + " is not simple");
      out.push_back(MixedPermutation{cls, k, std::move(theta)});
    }
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end(),
            [](const MixedPermutation& a, const MixedPermutation& b) { return a.perm < b.perm; });
  auto dup = std::adjacent_find(sorted.begin(), sorted.end(),
                                [](const MixedPermutation& a, const MixedPermutation& b) { return a.perm == b.perm; });
  if (dup != sorted.end()) throw ConsistencyError("enumerate_mixed: duplicate " + to_string(dup->perm));
  return out;
}

std::array<Permutation, 4> identity_paste_family(int r) {
  require_odd_order(r, "identity_paste_family");
  const auto id = Permutation::identity(r);
  const auto alpha = stefan(r, StefanVariant::Alpha);
  const auto beta = stefan(r, StefanVariant::Beta);
  return {paste_left(alpha, id), paste_left(beta, id), paste_left(id, alpha), paste_left(id, beta)};
}

std::optional<MixedPermutation> identify_mixed(const Permutation& p) {
  const auto md = mixed_degree(p.degree());
  if (!md || md->exponent != 1 || !is_simple_mixed(p)) return std::nullopt;
  const int r = md->odd_part;
  const auto square = power(p, 2);
  const auto left = restrict_to_block(square, block(p.degree(), 2, 1));
  const auto right = restrict_to_block(square, block(p.degree(), 2, 2));
  if (!left || !right) return std::nullopt;
  const auto lv = stefan_variant(*left);
  const auto rv = stefan_variant(*right);
  if (!lv || !rv) return std::nullopt;
  return MixedPermutation{make_class(*lv, *rv, r), p(1), p};
}

nlohmann::ordered_json to_json(const MixedPermutation& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name();
  j["order"] = m.perm.degree();
  j["images"] = std::vector<int>(m.perm.images().begin(), m.perm.images().end());
  j["square_class"] = m.square_class.label();
  j["first_image"] = m.first_image;
  return j;
}

}  // namespace simperm
