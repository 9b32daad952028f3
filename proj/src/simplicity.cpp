#include "simperm/simplicity.hpp"

#include <algorithm>
#include <string>

#include "simperm/error.hpp"

namespace simperm {

std::string_view to_string(StefanVariant v) noexcept {
  return v == StefanVariant::Alpha ? "alpha" : "beta";
}

std::vector<int> Block::points() const {
  std::vector<int> out;
  for (int x = first; x <= last; ++x) out.push_back(x);
  return out;
}

Block block(int n, int k, int j) {
  if (n < 1 || k < 1 || n % k != 0)
    throw DomainError("block: " + std::to_string(k) + " blocks do not divide degree " + std::to_string(n));
  if (j < 1 || j > k)
    throw DomainError("block: index " + std::to_string(j) + " outside 1.." + std::to_string(k));
  const int size = n / k;
  return Block{(j - 1) * size + 1, j * size};
}

std::optional<Permutation> restrict_to_block(const Permutation& p, Block b) {
  std::vector<int> images;
  images.reserve(b.size());
  for (int x = b.first; x <= b.last; ++x) {
    const int y = p(x);
    if (!b.contains(y)) return std::nullopt;
    images.push_back(y - b.first + 1);
  }
  return Permutation(std::move(images));
}

Permutation stefan(int m, StefanVariant variant) {
  if (m < 3 || m % 2 == 0) throw DomainError("stefan: order must be odd and >= 3, got " + std::to_string(m));
  // m = 2n - 1
  const int n = (m + 1) / 2;
  std::vector<int> images(m);
  if (variant == StefanVariant::Alpha) {
    for (int i = 1; i <= n - 1; ++i) images[i - 1] = 2 * n - i;
    images[n - 1] = n - 1;
    for (int i = n + 1; i <= 2 * n - 2; ++i) images[i - 1] = 2 * n - 1 - i;
    images[m - 1] = n;
  } else {
    images[0] = n;
    for (int i = 2; i <= n - 1; ++i) images[i - 1] = 2 * n + 1 - i;
    images[n - 1] = n + 1;
    for (int i = n + 1; i <= 2 * n - 1; ++i) images[i - 1] = 2 * n - i;
  }
  return Permutation(std::move(images));
}

std::optional<StefanVariant> stefan_variant(const Permutation& p) {
  const int m = p.degree();
  if (m < 3 || m % 2 == 0) return std::nullopt;
  if (p == stefan(m, StefanVariant::Alpha)) return StefanVariant::Alpha;
  if (p == stefan(m, StefanVariant::Beta)) return StefanVariant::Beta;
  return std::nullopt;
}

bool is_simple_odd(const Permutation& p) { return stefan_variant(p).has_value(); }

std::optional<int> pow2_exponent(long long n) noexcept {
  if (n < 1 || (n & (n - 1)) != 0) return std::nullopt;
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

std::optional<MixedDegree> mixed_degree(int n) noexcept {
  if (n < 1) return std::nullopt;
  int r = n;
  int m = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++m;
  }
  if (m < 1 || r < 3) return std::nullopt;
  return MixedDegree{r, m};
}

bool is_simple_pow2(const Permutation& p) {
  const int n = p.degree();
  if (!pow2_exponent(n)) return false;
  if (n == 1) return true;
  const int half = n / 2;
  for (int i = 1; i <= half; ++i)
    if (p(i) <= half) return false;
  const auto square = power(p, 2);
  for (int j = 1; j <= 2; ++j) {
    auto restricted = restrict_to_block(square, block(n, 2, j));
    if (!restricted || !is_simple_pow2(*restricted)) return false;
  }
  return true;
}

bool is_simple_mixed(const Permutation& p) {
  const int n = p.degree();
  const auto md = mixed_degree(n);
  if (!md) return false;
  const int r = md->odd_part;
  const int blocks = 1 << md->exponent;

  // Induced action on blocks; each block must land exactly on a block.
  std::vector<int> action(blocks);
  for (int j = 1; j <= blocks; ++j) {
    const Block b = block(n, blocks, j);
    int lo = n + 1;
    int hi = 0;
    for (int x = b.first; x <= b.last; ++x) {
      lo = std::min(lo, p(x));
      hi = std::max(hi, p(x));
    }
    if (hi - lo != r - 1 || (lo - 1) % r != 0) return false;
    action[j - 1] = (lo - 1) / r + 1;
  }
  if (!is_simple_pow2(Permutation(std::move(action)))) return false;

  const auto iterate = power(p, static_cast<std::uint64_t>(blocks));
  for (int j = 1; j <= blocks; ++j) {
    auto restricted = restrict_to_block(iterate, block(n, blocks, j));
    if (!restricted || !is_simple_odd(*restricted)) return false;
  }
  return true;
}

SimplicityClass classify_simple(const Permutation& p) {
  if (!is_full_cycle(p)) return NotSimple{};
  const int n = p.degree();
  if (auto k = pow2_exponent(n)) {
    if (is_simple_pow2(p)) return PowerOfTwo{*k};
    return NotSimple{};
  }
  if (n % 2 == 1) {
    if (auto v = stefan_variant(p)) return OddStefan{*v};
    return NotSimple{};
  }
  if (is_simple_mixed(p)) {
    const auto md = *mixed_degree(n);
    return Mixed{md.odd_part, md.exponent};
  }
  return NotSimple{};
}

nlohmann::ordered_json to_json(const SimplicityClass& c) {
  nlohmann::ordered_json j;
  std::visit(
      [&j](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OddStefan>) {
          j["class"] = "odd";
          j["variant"] = std::string(to_string(v.variant));
        } else if constexpr (std::is_same_v<T, PowerOfTwo>) {
          j["class"] = "pow2";
          j["exponent"] = v.exponent;
        } else if constexpr (std::is_same_v<T, Mixed>) {
          j["class"] = "mixed";
          j["r"] = v.odd_part;
          j["m"] = v.exponent;
        } else {
          j["class"] = "none";
        }
      },
      c);
  return j;
}

}  // namespace simperm
