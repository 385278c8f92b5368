// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bhchaos/core/fock.hpp"

using namespace bhchaos;
using namespace bhchaos::core;

TEST(HilbertDimension, KnownValues) {
  EXPECT_EQ(hilbert_dimension(5, 5), 126u);
  EXPECT_EQ(hilbert_dimension(7, 9), 6435u);
  EXPECT_EQ(hilbert_dimension(15, 5), 3876u);
  EXPECT_EQ(hilbert_dimension(2, 2), 3u);
  EXPECT_EQ(hilbert_dimension(0, 4), 1u);
  EXPECT_EQ(hilbert_dimension(40, 3), 861u);
}

TEST(HilbertDimension, OverflowIsCapacityError) {
  try {
    hilbert_dimension(400, 400);
    FAIL() << "expected a capacity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(Basis, TwoAtomsTwoSitesInOrder) {
  auto b = enumerate_basis(2, 2);
  ASSERT_EQ(b.size(), 3);
  const std::vector<std::vector<Occupation>> want = {{2, 0}, {1, 1}, {0, 2}};
  for (Index i = 0; i < 3; ++i) {
    auto s = b[i];
    EXPECT_EQ(std::vector<Occupation>(s.begin(), s.end()), want[static_cast<std::size_t>(i)]);
  }
}

TEST(Basis, DescendingLexicographicAndComplete) {
  auto b = enumerate_basis(5, 5);
  ASSERT_EQ(b.size(), 126);
  std::set<std::vector<Occupation>> seen;
  for (Index i = 0; i < b.size(); ++i) {
    auto s = b[i];
    std::vector<Occupation> v(s.begin(), s.end());
    int sum = 0;
    for (auto n : v) {
      EXPECT_GE(n, 0);
      sum += n;
    }
    EXPECT_EQ(sum, 5);
    if (i > 0) {
      auto p = b[i - 1];
      EXPECT_TRUE(std::vector<Occupation>(p.begin(), p.end()) > v);
    }
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 126u);
}

TEST(Basis, RankingRoundTrips) {
  for (auto [n, l] : {std::pair{5, 5}, std::pair{7, 4}, std::pair{3, 9}, std::pair{1, 6}}) {
    auto b = enumerate_basis(n, l);
    for (Index i = 0; i < b.size(); ++i) {
      EXPECT_EQ(b.index(b[i]), i);
      EXPECT_EQ(b.find(b[i]), i);
      EXPECT_EQ(b.index(b.state(i)), i);
    }
  }
}

TEST(Basis, FindRejectsForeignVectors) {
  auto b = enumerate_basis(3, 3);
  const std::vector<Occupation> wrong_sum = {1, 1, 0};
  const std::vector<Occupation> negative = {4, -1, 0};
  const std::vector<Occupation> wrong_len = {3, 0};
  EXPECT_FALSE(b.find(wrong_sum).has_value());
  EXPECT_FALSE(b.find(negative).has_value());
  EXPECT_FALSE(b.find(wrong_len).has_value());
}

TEST(Basis, EndpointsAreExtremeStates) {
  auto b = enumerate_basis(4, 3);
  EXPECT_EQ(b.state(0).occ, (std::vector<Occupation>{4, 0, 0}));
  EXPECT_EQ(b.state(b.size() - 1).occ, (std::vector<Occupation>{0, 0, 4}));
}

TEST(Quasimomentum, Examples) {
  FockState all_zero{{5, 0, 0, 0, 0}, Representation::bloch};
  EXPECT_EQ(quasimomentum_of(all_zero), 0);
  FockState one_up{{4, 1, 0, 0, 0}, Representation::bloch};
  EXPECT_EQ(quasimomentum_of(one_up), 1);
  FockState l4{{0, 2, 0, 2}, Representation::bloch};
  EXPECT_EQ(quasimomentum_of(l4), 0);
  FockState wrap{{0, 0, 1, 2}, Representation::bloch};
  EXPECT_EQ(quasimomentum_of(wrap), 0);  // 2 + 6 = 8 = 0 mod 4
  FockState three{{0, 0, 0, 1}, Representation::bloch};
  EXPECT_EQ(quasimomentum_of(three), 3);
}

TEST(Quasimomentum, SiteStateIsRepresentationError) {
  FockState s{{1, 0, 0}, Representation::site};
  try {
    quasimomentum_of(s);
    FAIL() << "expected a representation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::representation);
  }
}
