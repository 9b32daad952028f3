#include "simperm/genealogy.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "simperm/error.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {

namespace {

constexpr int kMaxSuccessorInputDegree = 16;
constexpr int kMaxTreeLevel = 4;

void require_simple_pow2(const Permutation& p, const char* op) {
  if (!is_simple_pow2(p))
    throw PreconditionError(std::string(op) + ": " + to_string(p) + " is not a simple permutation of order 2^n");
}

int chain_exponent(int n, const char* op) {
  auto k = pow2_exponent(n);
  if (!k) throw DomainError(std::string(op) + ": " + std::to_string(n) + " is not a power of two");
  return *k;
}

void sort_by_text(std::vector<Permutation>& perms) {
  std::sort(perms.begin(), perms.end(),
            [](const Permutation& a, const Permutation& b) { return to_string(a) < to_string(b); });
}

// The set S with base ∘ rho_S == target, if one exists. Right-composing with
// rho_s swaps the images at positions 2s-1 and 2s.
std::optional<std::vector<int>> rho_set_between(const Permutation& base, const Permutation& target) {
  if (base.degree() != target.degree()) return std::nullopt;
  std::vector<int> set;
  if (base.degree() % 2 != 0) {
    if (base.degree() == 1 && base == target) return set;
    return std::nullopt;
  }
  for (int s = 1; 2 * s <= base.degree(); ++s) {
    const int a = base(2 * s - 1);
    const int b = base(2 * s);
    if (target(2 * s - 1) == a && target(2 * s) == b) continue;
    if (target(2 * s - 1) == b && target(2 * s) == a) {
      set.push_back(s);
      continue;
    }
    return std::nullopt;
  }
  return set;
}

}  // namespace

Permutation star(const Permutation& p) {
  require_simple_pow2(p, "star");
  const int n = p.degree();
  std::vector<int> images(2 * n);
  for (int k = 1; k <= n; ++k) {
    images[2 * k - 1] = 2 * p(k);
    images[2 * k - 2] = 2 * p(k) - 1;
  }
  return Permutation(std::move(images));
}

Permutation substar(const Permutation& p) {
  if (p.degree() == 1) throw DomainError("substar: degree 1 has no predecessor");
  require_simple_pow2(p, "substar");
  const int half = p.degree() / 2;
  std::vector<int> images(half);
  for (int k = 1; k <= half; ++k) images[k - 1] = (p(2 * k) + 1) / 2;
  return Permutation(std::move(images));
}

Permutation rho(int s, int n) {
  if (s < 1 || 2 * s > n)
    throw DomainError("rho: transposition index " + std::to_string(s) + " needs degree >= " +
                      std::to_string(2 * s) + ", got " + std::to_string(n));
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i;
  std::swap(images[2 * s - 2], images[2 * s - 1]);
  return Permutation(std::move(images));
}

Permutation rho_prefix(int count, int n) {
  auto out = Permutation::identity(n);
  for (int s = 1; s <= count; ++s) out = compose(out, rho(s, n));
  return out;
}

std::vector<Permutation> successors(const Permutation& p) {
  require_simple_pow2(p, "successors");
  if (p.degree() > kMaxSuccessorInputDegree)
    throw DomainError("successors: input degree capped at " + std::to_string(kMaxSuccessorInputDegree));
  const auto doubled = star(p);
  const auto base = doubled.images();
  const int pairs = p.degree();
  std::vector<Permutation> out;
  std::vector<int> images(base.begin(), base.end());
  for (unsigned long mask = 1; mask < (1UL << pairs); ++mask) {
    if (__builtin_popcountl(mask) % 2 == 0) continue;
    std::copy(base.begin(), base.end(), images.begin());
    for (int s = 1; s <= pairs; ++s)
      if (mask & (1UL << (s - 1))) std::swap(images[2 * s - 2], images[2 * s - 1]);
    Permutation eta(images);
    if (is_simple_pow2(eta)) out.push_back(std::move(eta));
  }
  sort_by_text(out);
  return out;
}

Permutation theta_chain(int n) {
  chain_exponent(n, "theta_chain");
  auto theta = Permutation::identity(1);
  for (int size = 2; size <= n; size *= 2) theta = paste_left(Permutation::identity(size / 2), theta);
  return theta;
}

Permutation phi_chain(int n) {
  chain_exponent(n, "phi_chain");
  auto phi = Permutation::identity(1);
  for (int size = 2; size <= n; size *= 2)
    phi = paste_left(reverse_perm(Permutation::identity(size / 2)), reverse_perm(phi));
  return phi;
}

GenealogyTree genealogy_tree(int max_level) {
  if (max_level < 0 || max_level > kMaxTreeLevel)
    throw DomainError("genealogy_tree: max_level must lie in 0.." + std::to_string(kMaxTreeLevel));
  GenealogyTree tree;
  tree.levels.push_back({Permutation::identity(1)});
  for (int level = 1; level <= max_level; ++level) {
    std::vector<Permutation> next;
    for (const auto& parent : tree.levels.back()) {
      for (auto& child : successors(parent)) {
        tree.edges.emplace_back(parent, child);
        next.push_back(std::move(child));
      }
    }
    sort_by_text(next);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

std::string to_dot(const GenealogyTree& tree) {
  std::string out = "digraph genealogy {\n";
  for (std::size_t level = 0; level < tree.levels.size(); ++level) {
    out += "  { rank=same;";
    for (const auto& p : tree.levels[level]) out += " \"" + to_string(p) + "\";";
    out += " }\n";
  }
  for (const auto& [parent, child] : tree.edges)
    out += "  \"" + to_string(parent) + "\" -> \"" + to_string(child) + "\";\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json to_json(const GenealogyTree& tree) {
  nlohmann::ordered_json j;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& level : tree.levels) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& p : level) row.push_back(to_string(p));
    j["levels"].push_back(std::move(row));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [parent, child] : tree.edges) j["edges"].push_back({to_string(parent), to_string(child)});
  return j;
}

std::size_t ChainGenerationReport::odd_expressible() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.via_theta_odd || e.via_phi_odd; });
}

std::size_t ChainGenerationReport::any_expressible() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.via_theta_any || e.via_phi_any; });
}

ChainGenerationReport chain_generation_report(int n) {
  const int level = chain_exponent(n, "chain_generation_report");
  const auto tree = genealogy_tree(level);
  const auto theta = theta_chain(n);
  const auto phi = phi_chain(n);
  ChainGenerationReport report;
  report.degree = n;
  for (const auto& member : tree.levels.back()) {
    ChainGenerationReport::Entry e{member};
    if (auto s = rho_set_between(theta, member)) {
      e.via_theta_any = true;
      e.via_theta_odd = s->size() % 2 == 1;
    }
    if (auto s = rho_set_between(phi, member)) {
      e.via_phi_any = true;
      e.via_phi_odd = s->size() % 2 == 1;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace simperm
