#include <gtest/gtest.h>

#include <random>

#include "birev/error.hpp"
#include "birev/perm_group.hpp"
#include "support/oracle.hpp"

using namespace birev;

namespace {

PointPerm cycleOn(std::size_t n, std::vector<std::uint32_t> pts) {
  PointPerm p = identityPerm(n);
  for (std::size_t j = 0; j < pts.size(); ++j) p[pts[j]] = pts[(j + 1) % pts.size()];
  return p;
}

}  // namespace

TEST(PermGroup, ComposeInverse) {
  const PointPerm p = cycleOn(4, {0, 1, 2});
  const PointPerm t = cycleOn(4, {0, 3});
  EXPECT_EQ(composePerm(p, t)[0], p[t[0]]);
  EXPECT_EQ(composePerm(p, invertPerm(p)), identityPerm(4));
}

TEST(PermGroup, EnumerateSmallGroups) {
  const std::vector<PointPerm> s3{cycleOn(3, {0, 1}), cycleOn(3, {0, 1, 2})};
  const auto elements = enumerateGroup(s3, 3, 100);
  EXPECT_EQ(elements.size(), 6u);
  EXPECT_EQ(elements.front(), identityPerm(3));
  EXPECT_EQ(enumerateGroup({}, 5, 10).size(), 1u);
  EXPECT_THROW(enumerateGroup(s3, 3, 5), Error);
}

TEST(PermGroup, OrderOfSymmetricAndCyclic) {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t x = 0; x < n; ++x) all[x] = x;
    const std::vector<PointPerm> gens{cycleOn(n, {0, 1}), cycleOn(n, all)};
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(groupOrder(gens, n, 1'000'000'000), fact);
    EXPECT_EQ(groupOrder(std::vector<PointPerm>{cycleOn(n, all)}, n, 1000), n);
  }
  EXPECT_EQ(groupOrder({}, 4, 10), 1u);
}

TEST(PermGroup, OrderCap) {
  const std::vector<PointPerm> gens{cycleOn(6, {0, 1}), cycleOn(6, {0, 1, 2, 3, 4, 5})};
  EXPECT_EQ(groupOrder(gens, 6, 720), 720u);
  try {
    groupOrder(gens, 6, 719);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(PermGroup, SchreierSimsMatchesClosure) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<PointPerm> gens;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t g = 0; g < count; ++g) {
      PointPerm p = identityPerm(n);
      // Sparse generators keep the groups small and varied.
      for (int s = 0; s < 2; ++s) std::swap(p[rng() % n], p[rng() % n]);
      gens.push_back(p);
    }
    const auto expect = oracle::closureOrder(gens, n);
    EXPECT_EQ(groupOrder(gens, n, 1'000'000), expect);
    EXPECT_EQ(enumerateGroup(gens, n, 1'000'000).size(), expect);
  }
}

TEST(PermGroup, Orbit) {
  const std::vector<PointPerm> gens{cycleOn(6, {0, 2}), cycleOn(6, {2, 4})};
  const auto orbit = orbitOf(gens, 6, 0);
  EXPECT_EQ(orbit, (std::vector<std::uint32_t>{0, 2, 4}));
  EXPECT_EQ(orbitOf(gens, 6, 1), (std::vector<std::uint32_t>{1}));
}
