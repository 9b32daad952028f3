#include "simperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "simperm/error.hpp"

namespace simperm {

namespace {

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) throw ParseError("empty list", std::string(text));
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    auto token = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed token '" + std::string(token) + "'", std::string(token));
    values.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return values;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw NotAPermutation("not a permutation: empty image sequence");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw NotAPermutation("not a permutation: images [" + join(images_) +
                            "] are not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("identity: degree must be >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Cycle::Cycle(std::vector<int> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("cycle must contain at least one point");
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw std::invalid_argument("cycle points must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle points must be distinct");
}

int Cycle::min_point() const { return *std::min_element(points_.begin(), points_.end()); }

std::vector<int> Cycle::canonical() const {
  auto out = points_;
  std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

CycleDecomposition::CycleDecomposition(int degree, std::vector<Cycle> cycles)
    : degree_(degree), cycles_(std::move(cycles)) {
  std::vector<bool> seen(degree + 1, false);
  int covered = 0;
  for (const auto& c : cycles_) {
    for (int x : c.points()) {
      if (x > degree || seen[x])
        throw std::invalid_argument("cycles do not partition {1.." + std::to_string(degree) + "}");
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != degree)
    throw std::invalid_argument("cycles do not cover {1.." + std::to_string(degree) + "}");
  std::sort(cycles_.begin(), cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.min_point() < b.min_point(); });
}

Permutation CycleDecomposition::to_permutation() const {
  std::vector<int> images(degree_);
  for (const auto& c : cycles_) {
    auto pts = c.points();
    for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i] - 1] = pts[(i + 1) % pts.size()];
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: incompatible degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  // Walk each cycle once and advance k mod its length.
  const int n = p.degree();
  std::vector<int> images(n, 0);
  std::vector<int> orbit;
  for (int start = 1; start <= n; ++start) {
    if (images[start - 1]) continue;
    orbit.clear();
    int x = start;
    do {
      orbit.push_back(x);
      x = p(x);
    } while (x != start);
    const std::size_t len = orbit.size();
    const std::size_t shift = static_cast<std::size_t>(k % len);
    for (std::size_t i = 0; i < len; ++i) images[orbit[i] - 1] = orbit[(i + shift) % len];
  }
  return Permutation(std::move(images));
}

std::uint64_t order_of(const Permutation& p) {
  std::uint64_t order = 1;
  const auto decomposition = cycle_decomposition(p);
  for (const auto& c : decomposition.cycles())
    order = std::lcm(order, static_cast<std::uint64_t>(c.length()));
  return order;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<Cycle> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    int x = start;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = p(x);
    } while (x != start);
    cycles.emplace_back(std::move(orbit));
  }
  return CycleDecomposition(n, std::move(cycles));
}

bool is_full_cycle(const Permutation& p) {
  int x = p(1);
  int steps = 1;
  while (x != 1) {
    x = p(x);
    ++steps;
  }
  return steps == p.degree();
}

Cycle paste_cycles(const Cycle& u, const Cycle& v) {
  std::vector<int> points(u.points().begin(), u.points().end());
  for (int x : v.points()) {
    if (std::find(u.points().begin(), u.points().end(), x) != u.points().end())
      throw DisjointnessError("paste_cycles: point " + std::to_string(x) + " occurs in both cycles");
    points.push_back(x);
  }
  return Cycle(std::move(points));
}

Cycle reverse_cycle(const Cycle& u) {
  std::vector<int> points(u.points().rbegin(), u.points().rend());
  return Cycle(std::move(points));
}

Permutation paste_left(const Permutation& a, const Permutation& b) {
  std::vector<int> images;
  images.reserve(a.degree() + b.degree());
  for (int v : a.images()) images.push_back(v + b.degree());
  images.insert(images.end(), b.images().begin(), b.images().end());
  return Permutation(std::move(images));
}

Permutation paste_right(const Permutation& a, const Permutation& b) {
  std::vector<int> images(a.images().begin(), a.images().end());
  images.reserve(a.degree() + b.degree());
  for (int v : b.images()) images.push_back(v + a.degree());
  return Permutation(std::move(images));
}

Permutation reverse_perm(const Permutation& a) {
  return Permutation(std::vector<int>(a.images().rbegin(), a.images().rend()));
}

std::string to_string(const Permutation& p) { return join(p.images()); }

std::string to_string(const Cycle& c) { return "(" + join(c.canonical()) + ")"; }

std::string to_string(const CycleDecomposition& d) {
  std::string out;
  for (const auto& c : d.cycles()) out += to_string(c);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_int_list(strip_spaces(text)));
}

Cycle parse_cycle(std::string_view text) {
  auto body = strip_spaces(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("cycle must be parenthesized: '" + std::string(text) + "'", std::string(text));
  auto values = parse_int_list(std::string_view(body).substr(1, body.size() - 2));
  try {
    return Cycle(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), std::string(text));
  }
}

}  // namespace simperm
