#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles/literal_pow2.hpp"
#include "simperm/error.hpp"
#include "simperm/genealogy.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {
namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Sim(n) by scanning every full cycle against the literal block conditions.
std::vector<Permutation> literal_sim(int n) {
  std::vector<Permutation> out;
  if (n == 1) return {P({1})};
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<int> images(n);
    int from = 1;
    for (int x : rest) {
      images[from - 1] = x;
      from = x;
    }
    images[from - 1] = 1;
    Permutation p(images);
    if (testing::literal_simple_pow2(p)) out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_text(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

// t(2^k) = (2^k - (-1)^k) / 3.
int jacobsthal_prefix(int n) {
  int k = *pow2_exponent(n);
  return (n - (k % 2 == 0 ? 1 : -1)) / 3;
}

TEST(Star, Examples) {
  EXPECT_EQ(star(P({2, 1})), P({3, 4, 1, 2}));
  EXPECT_EQ(star(P({3, 4, 2, 1})), P({5, 6, 7, 8, 3, 4, 1, 2}));
  EXPECT_EQ(star(P({1})), P({1, 2}));
}

TEST(Star, RejectsNonSimple) {
  EXPECT_THROW(star(P({2, 3, 4, 1})), PreconditionError);
  EXPECT_THROW(star(P({3, 1, 2})), PreconditionError);
}

TEST(Star, TwoEqualCycles) {
  const auto tree = genealogy_tree(4);
  for (int level = 1; level <= 4; ++level)
    for (const auto& p : tree.levels[level]) {
      const auto d = cycle_decomposition(star(p));
      ASSERT_EQ(d.size(), 2u) << to_string(p);
      for (const auto& c : d.cycles()) ASSERT_EQ(c.length(), p.degree()) << to_string(p);
    }
}

TEST(Substar, Examples) {
  EXPECT_EQ(substar(P({3, 4, 2, 1})), P({2, 1}));
  EXPECT_EQ(substar(P({4, 3, 1, 2})), P({2, 1}));
  EXPECT_EQ(substar(P({2, 1})), P({1}));
}

TEST(Substar, Errors) {
  EXPECT_THROW(substar(P({1})), DomainError);
  EXPECT_THROW(substar(P({2, 3, 4, 1})), PreconditionError);
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(1, 2), P({2, 1}));
  EXPECT_EQ(rho(2, 4), P({1, 2, 4, 3}));
  EXPECT_EQ(compose(star(P({2, 1})), rho(1, 4)), P({4, 3, 1, 2}));
  EXPECT_THROW(rho(3, 4), DomainError);
  EXPECT_EQ(rho_prefix(0, 4), Permutation::identity(4));
  EXPECT_EQ(rho_prefix(2, 4), P({2, 1, 4, 3}));
}

TEST(Successors, Examples) {
  EXPECT_EQ(successors(P({1})), std::vector<Permutation>{P({2, 1})});
  EXPECT_EQ(successors(P({2, 1})), (std::vector<Permutation>{P({3, 4, 2, 1}), P({4, 3, 1, 2})}));
}

TEST(Successors, LeftInverseLaw) {
  for (int n : {1, 2, 4, 8})
    for (const auto& p : literal_sim(n))
      for (const auto& eta : successors(p)) {
        ASSERT_TRUE(is_simple_pow2(eta));
        ASSERT_EQ(substar(eta), p) << to_string(eta);
      }
}

TEST(Successors, CoverTheNextLevel) {
  for (int n : {1, 2, 4}) {
    std::vector<Permutation> all;
    for (const auto& p : literal_sim(n))
      for (auto& eta : successors(p)) all.push_back(eta);
    EXPECT_EQ(sorted_text(all), sorted_text(literal_sim(2 * n))) << n;
  }
}

TEST(Chains, Examples) {
  EXPECT_EQ(theta_chain(1), P({1}));
  EXPECT_EQ(theta_chain(4), P({3, 4, 2, 1}));
  EXPECT_EQ(phi_chain(4), P({4, 3, 1, 2}));
  EXPECT_EQ(theta_chain(8), P({5, 6, 7, 8, 3, 4, 2, 1}));
  EXPECT_EQ(phi_chain(8), P({8, 7, 6, 5, 2, 1, 3, 4}));
  EXPECT_THROW(theta_chain(6), DomainError);
  EXPECT_THROW(phi_chain(0), DomainError);
}

TEST(Chains, SimpleUpTo64) {
  for (int n = 1; n <= 64; n *= 2) {
    EXPECT_TRUE(is_simple_pow2(theta_chain(n))) << n;
    EXPECT_TRUE(is_simple_pow2(phi_chain(n))) << n;
  }
}

TEST(Chains, ThetaIdentities) {
  for (int n = 2; n <= 64; n *= 2) {
    EXPECT_EQ(substar(theta_chain(2 * n)), theta_chain(n)) << n;
    EXPECT_EQ(theta_chain(n), compose(star(theta_chain(n / 2)), rho(n / 2, n))) << n;
  }
}

TEST(Chains, PhiHalvingIdentity) {
  for (int n = 2; n <= 64; n *= 2) EXPECT_EQ(substar(phi_chain(2 * n)), phi_chain(n)) << n;
}

TEST(Chains, PhiDoublingUsesAJacobsthalPrefix) {
  const std::vector<int> expected_prefix = {1, 1, 3, 5, 11, 21};
  int i = 0;
  for (int n = 2; n <= 64; n *= 2, ++i) {
    ASSERT_EQ(jacobsthal_prefix(n), expected_prefix[i]);
    EXPECT_EQ(phi_chain(n), compose(star(phi_chain(n / 2)), rho_prefix(jacobsthal_prefix(n), n))) << n;
  }
}

TEST(Chains, PhiPrefixOfHalfLengthMatchesOnlyAtFourAndEight) {
  for (int n = 2; n <= 64; n *= 2) {
    const bool holds = phi_chain(n) == compose(star(phi_chain(n / 2)), rho_prefix((n - 2) / 2, n));
    EXPECT_EQ(holds, n == 4 || n == 8) << n;
  }
}

TEST(GenealogyTree, SmallLevels) {
  const auto t1 = genealogy_tree(1);
  ASSERT_EQ(t1.max_level(), 1);
  EXPECT_EQ(t1.levels[0], std::vector<Permutation>{P({1})});
  EXPECT_EQ(t1.levels[1], std::vector<Permutation>{P({2, 1})});
  const auto t2 = genealogy_tree(2);
  EXPECT_EQ(sorted_text(t2.levels[2]), sorted_text({P({3, 4, 2, 1}), P({4, 3, 1, 2})}));
  EXPECT_THROW(genealogy_tree(5), DomainError);
  EXPECT_THROW(genealogy_tree(-1), DomainError);
}

TEST(GenealogyTree, LevelsMatchLiteralScan) {
  const auto tree = genealogy_tree(3);
  for (int level = 0; level <= 3; ++level)
    EXPECT_EQ(sorted_text(tree.levels[level]), sorted_text(literal_sim(1 << level))) << level;
  EXPECT_EQ(tree.levels[3].size(), 16u);
}

TEST(GenealogyTree, NodeAndEdgeInvariants) {
  const auto tree = genealogy_tree(4);
  for (int level = 0; level <= 4; ++level)
    for (const auto& p : tree.levels[level]) {
      ASSERT_EQ(p.degree(), 1 << level);
      ASSERT_TRUE(is_simple_pow2(p));
    }
  std::size_t child_count = 0;
  for (int level = 1; level <= 4; ++level) child_count += tree.levels[level].size();
  EXPECT_EQ(tree.edges.size(), child_count);
  for (const auto& [parent, child] : tree.edges) ASSERT_EQ(substar(child), parent);
}

TEST(GenealogyTree, Serialization) {
  const auto tree = genealogy_tree(2);
  EXPECT_EQ(to_json(tree).dump(),
            R"({"levels":[["1"],["2,1"],["3,4,2,1","4,3,1,2"]],)"
            R"("edges":[["1","2,1"],["2,1","3,4,2,1"],["2,1","4,3,1,2"]]})");
  const auto dot = to_dot(tree);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
  EXPECT_NE(dot.find("\"2,1\" -> \"3,4,2,1\""), std::string::npos);
}

TEST(ChainGenerationReport, OddProductsGenerateNothingAnyProductsGenerateAll) {
  for (int n : {4, 8}) {
    const auto report = chain_generation_report(n);
    EXPECT_EQ(report.degree, n);
    EXPECT_EQ(report.entries.size(), n == 4 ? 2u : 16u);
    EXPECT_EQ(report.odd_expressible(), 0u) << n;
    EXPECT_EQ(report.any_expressible(), report.entries.size()) << n;
  }
}

}  // namespace
}  // namespace simperm
