#include "simperm/dynamics.hpp"

#include <algorithm>

#include "simperm/error.hpp"

namespace simperm {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::string vertex_label(int i) { return "I" + std::to_string(i); }

// x -> a x + b
struct Affine {
  Rational a{1};
  Rational b{0};

  bool is_identity() const { return a == 1 && b == 0; }
};

class ItinerarySearch {
 public:
  ItinerarySearch(const Permutation& p, const MarkovGraph& g, int max_period, std::set<int>& out)
      : p_(p), g_(g), max_(max_period), out_(out) {}

  void run() {
    for (int start = 1; start <= g_.vertex_count(); ++start) {
      start_ = start;
      history_.clear();
      descend(start, Rational(start), Rational(start + 1), Affine{});
    }
  }

 private:
  // `g` maps the current subinterval [lo, hi] of I_start onto I_current
  // along the itinerary recorded in history_.
  void descend(int current, const Rational& lo, const Rational& hi, const Affine& g) {
    const int depth = static_cast<int>(history_.size());
    if (depth > 0 && current == start_) record(depth, lo, hi, g);
    if (depth == max_) return;

    const int slope = p_(current + 1) - p_(current);
    Affine next{g.a * slope, (g.b - current) * slope + p_(current)};
    for (int j : g_.successors(current)) {
      Rational t1 = (Rational(j) - next.b) / next.a;
      Rational t2 = (Rational(j + 1) - next.b) / next.a;
      if (t1 > t2) std::swap(t1, t2);
      const Rational nlo = std::max(lo, t1);
      const Rational nhi = std::min(hi, t2);
      if (nlo >= nhi) continue;
      history_.push_back(next);
      descend(j, nlo, nhi, next);
      history_.pop_back();
    }
  }

  void record(int m, const Rational& lo, const Rational& hi, const Affine& g) {
    if (g.a != 1) {
      const Rational x = g.b / (1 - g.a);
      if (x < lo || x > hi) return;
      const int period = minimal_period(p_, x, m);
      if (period == 0) throw ConsistencyError("forced_periods: fixed point of f^m is not periodic");
      out_.insert(period);
      return;
    }
    if (g.b != 0) return;
    // f^m is the identity on the whole subinterval; all but finitely many of
    // its points have least period m unless a proper divisor iterate is also
    // the identity there.
    for (int d = 1; d < m; ++d)
      if (m % d == 0 && history_[d - 1].is_identity()) return;
    out_.insert(m);
  }

  const Permutation& p_;
  const MarkovGraph& g_;
  int max_;
  std::set<int>& out_;
  int start_ = 1;
  std::vector<Affine> history_;
};

int mobius(int n) {
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

using Matrix = std::vector<std::vector<BigInt>>;

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

}  // namespace

SharkovskiiKey sharkovskii_key(std::uint64_t m) {
  if (m == 0) throw DomainError("sharkovskii_key: argument must be >= 1");
  int exponent = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++exponent;
  }
  return SharkovskiiKey{exponent, m};
}

std::strong_ordering sharkovskii_cmp(std::uint64_t a, std::uint64_t b) {
  const auto ka = sharkovskii_key(a);
  const auto kb = sharkovskii_key(b);
  const bool a_pow2 = ka.odd_part == 1;
  const bool b_pow2 = kb.odd_part == 1;
  if (a_pow2 != b_pow2) return a_pow2 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a_pow2) return kb.exponent <=> ka.exponent;
  if (ka.exponent != kb.exponent) return ka.exponent <=> kb.exponent;
  return ka.odd_part <=> kb.odd_part;
}

MarkovGraph::MarkovGraph(int vertex_count, std::vector<std::vector<int>> adjacency)
    : vertex_count_(vertex_count), adjacency_(std::move(adjacency)) {
  if (static_cast<int>(adjacency_.size()) != vertex_count_)
    throw std::invalid_argument("MarkovGraph: adjacency size does not match vertex count");
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    for (int v : row)
      if (v < 1 || v > vertex_count_) throw std::invalid_argument("MarkovGraph: vertex out of range");
  }
}

bool MarkovGraph::has_edge(int from, int to) const {
  const auto& row = successors(from);
  return std::binary_search(row.begin(), row.end(), to);
}

std::vector<std::pair<int, int>> MarkovGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= vertex_count_; ++i)
    for (int j : successors(i)) out.emplace_back(i, j);
  return out;
}

MarkovGraph markov_graph(const Permutation& p) {
  if (p.degree() < 2 || !is_full_cycle(p))
    throw PreconditionError("markov_graph: " + to_string(p) + " is not a full cycle of degree >= 2");
  const int gaps = p.degree() - 1;
  std::vector<std::vector<int>> adjacency(gaps);
  for (int i = 1; i <= gaps; ++i) {
    const int lo = std::min(p(i), p(i + 1));
    const int hi = std::max(p(i), p(i + 1));
    for (int j = lo; j < hi; ++j) adjacency[i - 1].push_back(j);
  }
  return MarkovGraph(gaps, std::move(adjacency));
}

Rational connect_the_dots(const Permutation& p, const Rational& x) {
  const int n = p.degree();
  if (x < 1 || x > n) throw DomainError("connect_the_dots: point outside [1, n]");
  if (n == 1) return x;
  int i = static_cast<int>(BigInt(numerator(x) / denominator(x)));
  i = std::min(i, n - 1);
  return Rational(p(i)) + (x - i) * (p(i + 1) - p(i));
}

int minimal_period(const Permutation& p, const Rational& x, int limit) {
  Rational y = x;
  for (int k = 1; k <= limit; ++k) {
    y = connect_the_dots(p, y);
    if (y == x) return k;
  }
  return 0;
}

std::vector<int> PeriodSet::absent() const {
  std::vector<int> out;
  for (int m = 1; m <= max_period; ++m)
    if (!contains(m)) out.push_back(m);
  return out;
}

PeriodSet forced_periods(const Permutation& p, int max_period) {
  if (max_period < 1 || max_period > kMaxPeriodBound)
    throw DomainError("forced_periods: max_period must lie in 1.." + std::to_string(kMaxPeriodBound));
  if (!is_full_cycle(p)) throw PreconditionError("forced_periods: " + to_string(p) + " is not a full cycle");
  PeriodSet result;
  result.order = p.degree();
  result.max_period = max_period;
  if (p.degree() == 1) {
    result.present.insert(1);
    return result;
  }
  const auto graph = markov_graph(p);
  ItinerarySearch(p, graph, max_period, result.present).run();
  return result;
}

LoopPeriods loop_periods(const MarkovGraph& g, int max_len) {
  if (max_len < 0 || max_len > kMaxPeriodBound)
    throw DomainError("loop_periods: max_len must lie in 0.." + std::to_string(kMaxPeriodBound));
  LoopPeriods out;
  const int n = g.vertex_count();
  if (n == 0 || max_len == 0) return out;

  Matrix adjacency(n, std::vector<BigInt>(n));
  for (auto [i, j] : g.edges()) adjacency[i - 1][j - 1] = 1;

  // traces[L] = number of closed walks of length L with a marked start.
  std::vector<BigInt> traces(max_len + 1);
  Matrix walk = adjacency;
  for (int len = 1; len <= max_len; ++len) {
    if (len > 1) walk = multiply(walk, adjacency);
    for (int i = 0; i < n; ++i) traces[len] += walk[i][i];
    if (traces[len] > 0) out.raw.insert(len);
  }
  for (int len = 1; len <= max_len; ++len) {
    BigInt primitive = 0;
    for (int d = 1; d <= len; ++d)
      if (len % d == 0) primitive += mobius(len / d) * traces[d];
    if (primitive > 0) out.primitive.insert(len);
  }
  return out;
}

std::string to_dot(const MarkovGraph& g) {
  std::string out = "digraph markov {\n";
  for (int i = 1; i <= g.vertex_count(); ++i) out += "  " + vertex_label(i) + ";\n";
  for (auto [i, j] : g.edges()) out += "  " + vertex_label(i) + " -> " + vertex_label(j) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json to_json(const MarkovGraph& g) {
  nlohmann::ordered_json j;
  auto vertices = nlohmann::ordered_json::array();
  nlohmann::ordered_json adjacency = nlohmann::ordered_json::object();
  for (int i = 1; i <= g.vertex_count(); ++i) {
    vertices.push_back(vertex_label(i));
    auto row = nlohmann::ordered_json::array();
    for (int t : g.successors(i)) row.push_back(vertex_label(t));
    adjacency[vertex_label(i)] = std::move(row);
  }
  j["vertices"] = std::move(vertices);
  j["adjacency"] = std::move(adjacency);
  return j;
}

nlohmann::ordered_json to_json(const PeriodSet& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order;
  j["max"] = s.max_period;
  j["present"] = std::vector<int>(s.present.begin(), s.present.end());
  j["absent"] = s.absent();
  return j;
}

nlohmann::ordered_json to_json(const LoopPeriods& l) {
  nlohmann::ordered_json j;
  j["raw"] = std::vector<int>(l.raw.begin(), l.raw.end());
  j["primitive"] = std::vector<int>(l.primitive.begin(), l.primitive.end());
  return j;
}

}  // namespace simperm
