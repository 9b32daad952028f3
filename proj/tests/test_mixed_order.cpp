#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "golden/printed_tables.hpp"
#include "simperm/error.hpp"
#include "simperm/mixed_order.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {
namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

ThetaSquareClass square_class(int r, std::string_view label) {
  for (const auto& c : theta_square_classes(r))
    if (c.label() == label) return c;
  throw std::logic_error("unknown class");
}

// Square root search independent of threading: every full cycle theta of the
// degree with theta(1) = k and theta^2 = sigma.
std::vector<Permutation> square_roots_by_search(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  std::vector<Permutation> out;
  std::vector<int> rest;
  for (int x = 2; x <= n; ++x)
    if (x != k) rest.push_back(x);
  do {
    std::vector<int> images(n);
    int from = 1, to = k;
    for (int x : rest) {
      images[from - 1] = to;
      from = to;
      to = x;
    }
    images[from - 1] = to;
    images[to - 1] = 1;
    Permutation theta(images);
    if (compose(theta, theta) == sigma) out.push_back(theta);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

TEST(ThetaSquareClasses, Examples) {
  EXPECT_EQ(square_class(3, "alpha|beta").square, P({3, 1, 2, 5, 6, 4}));
  EXPECT_EQ(square_class(3, "beta|alpha").square, P({2, 3, 1, 6, 4, 5}));
  EXPECT_EQ(square_class(5, "alpha|alpha").square, P({5, 4, 2, 1, 3, 10, 9, 7, 6, 8}));
  const auto classes = theta_square_classes(3);
  EXPECT_EQ(classes[0].tag(), "alphaalpha");
  EXPECT_EQ(classes[1].label(), "beta|beta");
  EXPECT_EQ(classes[2].label(), "alpha|beta");
  EXPECT_EQ(classes[3].label(), "beta|alpha");
  EXPECT_THROW(theta_square_classes(4), DomainError);
  EXPECT_THROW(theta_square_classes(1), DomainError);
}

TEST(ThetaSquareClasses, TwoCyclesSplitByHalves) {
  for (int r = 3; r <= 11; r += 2)
    for (const auto& c : theta_square_classes(r)) {
      const auto d = cycle_decomposition(c.square);
      ASSERT_EQ(d.size(), 2u);
      EXPECT_EQ(d.cycles()[0].length(), r);
      EXPECT_EQ(d.cycles()[0].min_point(), 1);
      EXPECT_EQ(d.cycles()[1].min_point(), r + 1);
    }
}

TEST(Thread, Examples) {
  EXPECT_EQ(thread(square_class(3, "alpha|alpha").square, 6), P({6, 4, 5, 1, 2, 3}));
  EXPECT_EQ(thread(square_class(3, "alpha|alpha").square, 4), P({4, 5, 6, 3, 1, 2}));
  EXPECT_EQ(thread(square_class(5, "beta|alpha").square, 8), P({8, 6, 7, 9, 10, 5, 4, 3, 2, 1}));
}

TEST(Thread, Errors) {
  const auto sq = square_class(3, "alpha|alpha").square;
  EXPECT_THROW(thread(sq, 3), DomainError);
  EXPECT_THROW(thread(sq, 7), DomainError);
  EXPECT_THROW(thread(P({1, 2, 3, 4, 5, 6}), 4), ConsistencyError);
  EXPECT_THROW(thread(P({4, 5, 6, 1, 2, 3}), 4), PreconditionError);
}

TEST(Thread, UniqueRootMatchesSearch) {
  for (int r : {3, 5})
    for (const auto& c : theta_square_classes(r))
      for (int k = r + 1; k <= 2 * r; ++k) {
        const auto roots = square_roots_by_search(c.square, k);
        ASSERT_EQ(roots.size(), 1u) << c.label() << " " << k;
        EXPECT_EQ(roots.front(), thread(c.square, k));
      }
}

TEST(EnumerateMixed, GoldenRowsExceptTheMisprintedOne) {
  const auto six = enumerate_mixed(1);
  const auto ten = enumerate_mixed(2);
  int matched = 0;
  for (const auto& row : testing::printed_mixed_rows()) {
    const auto& pool = row.images.size() == 6 ? six : ten;
    const auto it = std::find_if(pool.begin(), pool.end(), [&](const MixedPermutation& m) {
      return m.square_class.label() == row.square_class && m.first_image == row.first_image;
    });
    ASSERT_NE(it, pool.end());
    if (row.square_class == "alpha|beta" && row.first_image == 4 && row.images.size() == 6) {
      // The printed row is not a 6-cycle; threading gives the simple root.
      EXPECT_FALSE(is_full_cycle(Permutation(row.images)));
      EXPECT_FALSE(is_simple_mixed(Permutation(row.images)));
      EXPECT_EQ(it->perm, P({4, 6, 5, 3, 2, 1}));
      continue;
    }
    EXPECT_EQ(it->perm, Permutation(row.images)) << it->name();
    ++matched;
  }
  EXPECT_EQ(matched, 31);
  EXPECT_EQ(testing::printed_mixed_rows().size(), 32u);
}

TEST(EnumerateMixed, Examples) {
  const auto six = enumerate_mixed(1);
  ASSERT_EQ(six.size(), 12u);
  EXPECT_TRUE(std::any_of(six.begin(), six.end(), [](const auto& m) { return m.perm == P({5, 6, 4, 2, 3, 1}); }));
  const auto ten = enumerate_mixed(2);
  ASSERT_EQ(ten.size(), 20u);
  EXPECT_TRUE(std::any_of(ten.begin(), ten.end(),
                          [](const auto& m) { return m.perm == P({7, 8, 10, 6, 9, 2, 3, 5, 1, 4}); }));
  EXPECT_EQ(six.front().name(), "theta_alphaalpha_4");
  EXPECT_EQ(six.back().name(), "theta_betaalpha_6");
  EXPECT_THROW(enumerate_mixed(0), DomainError);
}

TEST(EnumerateMixed, CardinalitySoundnessAndOrder) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_mixed(n);
    ASSERT_EQ(all.size(), static_cast<std::size_t>(8 * n + 4));
    std::set<Permutation> distinct;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& m = all[i];
      ASSERT_EQ(m.perm.degree(), 4 * n + 2);
      ASSERT_TRUE(is_simple_mixed(m.perm)) << m.name();
      ASSERT_TRUE(is_full_cycle(m.perm));
      distinct.insert(m.perm);
      ASSERT_EQ(m.first_image, static_cast<int>(2 * n + 2 + i % (2 * n + 1)));
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(EnumerateMixed, SquareAndFirstImageLaws) {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, std::set<int>> first_images;
    for (const auto& m : enumerate_mixed(n)) {
      ASSERT_EQ(power(m.perm, 2), m.square_class.square) << m.name();
      ASSERT_EQ(m.perm(1), m.first_image);
      first_images[m.square_class.label()].insert(m.first_image);
    }
    ASSERT_EQ(first_images.size(), 4u);
    for (const auto& [label, ks] : first_images) {
      ASSERT_EQ(ks.size(), static_cast<std::size_t>(2 * n + 1));
      EXPECT_EQ(*ks.begin(), 2 * n + 2);
      EXPECT_EQ(*ks.rbegin(), 4 * n + 2);
    }
  }
}

TEST(IdentityPasteFamily, OrderThreeMatrices) {
  const auto fam = identity_paste_family(3);
  EXPECT_EQ(fam[0], P({6, 4, 5, 1, 2, 3}));
  EXPECT_EQ(fam[1], P({5, 6, 4, 1, 2, 3}));
  EXPECT_EQ(fam[2], P({4, 5, 6, 3, 1, 2}));
  EXPECT_EQ(fam[3], P({4, 5, 6, 2, 3, 1}));
  EXPECT_EQ(fam[0], thread(square_class(3, "alpha|alpha").square, 6));
  EXPECT_THROW(identity_paste_family(6), DomainError);
}

TEST(IdentityPasteFamily, SubsetOfEnumeration) {
  for (int r = 3; r <= 7; r += 2) {
    const auto all = enumerate_mixed((r - 1) / 2);
    for (const auto& p : identity_paste_family(r)) {
      EXPECT_TRUE(is_simple_mixed(p)) << to_string(p);
      EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const auto& m) { return m.perm == p; })) << to_string(p);
    }
  }
}

TEST(IdentifyMixed, RecoversClassAndFirstImage) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_mixed(n)) {
      const auto id = identify_mixed(m.perm);
      ASSERT_TRUE(id);
      EXPECT_EQ(id->name(), m.name());
    }
  EXPECT_FALSE(identify_mixed(P({3, 4, 2, 1})));
  EXPECT_FALSE(identify_mixed(P({1, 2, 3, 4, 5, 6})));
  ASSERT_TRUE(identify_mixed(P({6, 5, 4, 1, 3, 2})));
  EXPECT_EQ(identify_mixed(P({6, 5, 4, 1, 3, 2}))->name(), "theta_betaalpha_6");
}

TEST(MixedPermutation, JsonRecord) {
  const auto six = enumerate_mixed(1);
  const auto it = std::find_if(six.begin(), six.end(), [](const auto& m) { return m.perm == P({6, 4, 5, 1, 2, 3}); });
  ASSERT_NE(it, six.end());
  EXPECT_EQ(to_json(*it).dump(),
            R"({"name":"theta_alphaalpha_6","order":6,"images":[6,4,5,1,2,3],"square_class":"alpha|alpha","first_image":6})");
}

}  // namespace
}  // namespace simperm
