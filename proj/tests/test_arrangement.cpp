#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ahilb/arrangement.hpp"
#include "ahilb/fixtures.hpp"

using namespace ahilb;

namespace {

void expect_monotone(const DimensionFunction& d) {
  for (SubsetMask s = 0; s <= d.full(); ++s)
    for (SubsetMask t = s; t <= d.full(); ++t)
      if ((s & t) == s) EXPECT_GE(d.dim(s), d.dim(t));
}

void expect_submodular_bound(const DimensionFunction& d) {
  const auto c = d.singleton_codims();
  for (SubsetMask s = 0; s <= d.full(); ++s) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (s & (1U << i)) total += c[i];
    EXPECT_LE(d.codim(s), std::min(d.ambient_dim(), total));
  }
}

}  // namespace

TEST(DimensionFunction, CoordinateAxes) {
  const auto d = dimension_function(fixtures::coordinate_axes());
  EXPECT_EQ(d.dim(0), 3U);
  for (SubsetMask s : {1U, 2U, 4U}) EXPECT_EQ(d.dim(s), 1U);
  for (SubsetMask s : {3U, 5U, 6U, 7U}) EXPECT_EQ(d.dim(s), 0U);
  EXPECT_TRUE(is_transversal(d));
}

TEST(DimensionFunction, PlanesThroughACommonLine) {
  for (const auto& a : {fixtures::spanning_planes(), fixtures::coplanar_planes()}) {
    const auto d = dimension_function(a);
    for (SubsetMask s : {1U, 2U, 4U}) EXPECT_EQ(d.dim(s), 2U);
    for (SubsetMask s : {3U, 5U, 6U, 7U}) EXPECT_EQ(d.dim(s), 1U);
    // c_{12} = 3 but min(4, 2 + 2) = 4.
    EXPECT_FALSE(is_transversal(d));
  }
  EXPECT_EQ(dimension_function(fixtures::spanning_planes()), dimension_function(fixtures::coplanar_planes()));
}

TEST(DimensionFunction, SingleSubspace) {
  const auto a = random_arrangement(5, {2}, 1);
  const auto d = dimension_function(a);
  EXPECT_EQ(d.dim(0), 5U);
  EXPECT_EQ(d.dim(1), 2U);
  EXPECT_TRUE(is_transversal(d));
}

TEST(DimensionFunction, ZeroSubspaceIsAllowed) {
  const Arrangement a(3, {SubspaceBasis(3), SubspaceBasis::span(3, std::vector<QVector>{{1, 0, 0}})});
  const auto d = dimension_function(a);
  EXPECT_EQ(d.codim(1), 3U);
  EXPECT_EQ(d.dim(3), 0U);
  EXPECT_TRUE(is_transversal(d));
}

TEST(Arrangement, Validation) {
  EXPECT_THROW(Arrangement(3, {SubspaceBasis::full(3)}), ValidationError);
  EXPECT_THROW(Arrangement(3, {}), ValidationError);
  EXPECT_THROW(Arrangement(3, {SubspaceBasis(4)}), ValidationError);
  std::vector<SubspaceBasis> many(5, SubspaceBasis(3));
  EXPECT_THROW(Arrangement(3, many, Limits{.max_subspaces = 4}), LimitError);
  EXPECT_NO_THROW(Arrangement(3, many, Limits{.max_subspaces = 5}));
  // Duplicates are fine.
  EXPECT_NO_THROW(Arrangement(3, {fixtures::coordinate_axes().subspace(0), fixtures::coordinate_axes().subspace(0)}));
}

TEST(DimensionFunction, ConstructorChecks) {
  EXPECT_THROW(DimensionFunction(3, 1, {3}), ValidationError);
  EXPECT_THROW(DimensionFunction(3, 1, {2, 1}), ValidationError);
  EXPECT_THROW(DimensionFunction(3, 1, {3, 3}), ValidationError);
  EXPECT_THROW(DimensionFunction(3, 2, {3, 1, 1, 2}), ValidationError);
  EXPECT_NO_THROW(DimensionFunction(3, 2, {3, 1, 1, 0}));
}

TEST(RandomArrangement, DeterministicAndValidated) {
  const auto a = random_arrangement(3, {1, 1, 1}, 42);
  const auto b = random_arrangement(3, {1, 1, 1}, 42);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a.subspace(i).vectors(), b.subspace(i).vectors());
  EXPECT_THROW(random_arrangement(3, {0, 1}, 1), std::invalid_argument);
  EXPECT_THROW(random_arrangement(3, {3}, 1), std::invalid_argument);
}

TEST(RandomArrangement, GenericPlanesInFourSpaceAreTransversal) {
  const auto d = dimension_function(random_arrangement(4, {2, 2}, 2024));
  EXPECT_EQ(d.dim(3), 0U);
  EXPECT_TRUE(is_transversal(d));
}

TEST(DimensionFunction, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t m = 1 + rng() % 4;
    std::vector<std::size_t> dims(m);
    for (auto& k : dims) k = 1 + rng() % (n - 1);
    const auto a = random_arrangement(n, dims, rng(), 1);
    const auto d = dimension_function(a);
    expect_monotone(d);
    expect_submodular_bound(d);
    for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(d.dim(1U << i), dims[i]);

    // Invariance under a change of coordinates (unit upper-triangular plus a
    // random lower entry keeps it invertible).
    QMatrix g = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = static_cast<long>(rng() % 5) - 2;
    g(n - 1, 0) = 0;
    EXPECT_EQ(dimension_function(transform(a, g)), d);

    // Equivariance under permuting the subspaces.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<SubspaceBasis> permuted;
    for (std::size_t i = 0; i < m; ++i) permuted.push_back(a.subspace(perm[i]));
    const auto dp = dimension_function(Arrangement(n, permuted));
    for (SubsetMask s = 0; s <= d.full(); ++s) {
      SubsetMask image = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (s & (1U << i)) image |= 1U << perm[i];
      EXPECT_EQ(dp.dim(s), d.dim(image));
    }
  }
}

TEST(Limits, ReadsEnvironment) {
  setenv("AHILB_MAX_SUBSPACES", "5", 1);
  setenv("AHILB_MAX_MONOMIALS", "123", 1);
  const auto l = Limits::from_env();
  EXPECT_EQ(l.max_subspaces, 5U);
  EXPECT_EQ(l.max_monomials, 123U);
  setenv("AHILB_MAX_SUBSPACES", "zero", 1);
  EXPECT_THROW(Limits::from_env(), std::invalid_argument);
  unsetenv("AHILB_MAX_SUBSPACES");
  unsetenv("AHILB_MAX_MONOMIALS");
}
