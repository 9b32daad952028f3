#ifndef SIMPERM_GENEALOGY_HPP
#define SIMPERM_GENEALOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simperm/permutation.hpp"

namespace simperm {

/// Doubling operator: star(p)(2k) = 2p(k), star(p)(2k-1) = 2p(k) - 1.
/// Throws PreconditionError unless p is simple of degree 2^n.
Permutation star(const Permutation& p);

/// Halving operator: substar(p)(k) = floor((p(2k) + 1) / 2).
/// Throws DomainError on degree 1, PreconditionError on non-simple input.
Permutation substar(const Permutation& p);

/// Transposition of 2s-1 and 2s in S_n. Throws DomainError if 2s > n.
Permutation rho(int s, int n);

/// rho(1, n) ∘ rho(2, n) ∘ ... ∘ rho(count, n); the identity for count = 0.
Permutation rho_prefix(int count, int n);

/// Every simple star(p) ∘ rho_{i1} ∘ ... ∘ rho_{i(2m-1)} over odd sets of
/// distinct indices, sorted by comma form. Input degree is capped at 16.
std::vector<Permutation> successors(const Permutation& p);

/// theta_N = e_{N/2} |◊ theta_{N/2}, theta_1 = (1). Throws DomainError unless N = 2^k.
Permutation theta_chain(int n);
/// phi_N = reverse(e_{N/2}) |◊ reverse(phi_{N/2}), phi_1 = (1).
Permutation phi_chain(int n);

struct GenealogyTree {
  /// levels[k] holds Sim(2^k), sorted by comma form.
  std::vector<std::vector<Permutation>> levels;
  /// (parent, child) with substar(child) == parent.
  std::vector<std::pair<Permutation, Permutation>> edges;

  int max_level() const noexcept { return static_cast<int>(levels.size()) - 1; }
};

/// Breadth-first closure of successors from (1). 0 <= max_level <= 4.
GenealogyTree genealogy_tree(int max_level);

/// One rank per level, nodes labelled with the comma form.
std::string to_dot(const GenealogyTree& tree);
/// {"levels": [[...], ...], "edges": [[parent, child], ...]}
nlohmann::ordered_json to_json(const GenealogyTree& tree);

/// How members of Sim(N) decompose as theta_N ∘ rho_S or phi_N ∘ rho_S.
struct ChainGenerationReport {
  struct Entry {
    Permutation member;
    bool via_theta_odd = false;
    bool via_theta_any = false;
    bool via_phi_odd = false;
    bool via_phi_any = false;
  };
  int degree = 0;
  std::vector<Entry> entries;

  std::size_t odd_expressible() const;
  std::size_t any_expressible() const;
};

/// N in {1, 2, 4, 8, 16}.
ChainGenerationReport chain_generation_report(int n);

}  // namespace simperm

#endif  // SIMPERM_GENEALOGY_HPP
