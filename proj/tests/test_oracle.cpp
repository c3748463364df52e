#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ahilb/fixtures.hpp"
#include "ahilb/gpca.hpp"
#include "ahilb/oracle.hpp"

using namespace ahilb;

namespace {

Arrangement random_instance(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  const std::size_t m = 1 + rng() % 3;
  std::vector<std::size_t> dims(m);
  for (auto& k : dims) k = 1 + rng() % (n - 1);
  return random_arrangement(n, dims, rng(), 2);
}

}  // namespace

TEST(MonomialBasis, CountAndOrder) {
  const MonomialBasis b(3, 2);
  ASSERT_EQ(b.size(), 6U);
  EXPECT_EQ(b[0], (Exponent{2, 0, 0}));
  EXPECT_EQ(b[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(b[5], (Exponent{0, 0, 2}));
  std::set<Exponent> seen(b.monomials().begin(), b.monomials().end());
  EXPECT_EQ(seen.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), i);
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t d = 0; d <= 6; ++d) {
      EXPECT_EQ(MonomialBasis(n, d).size(), monomial_count(n, d));
      EXPECT_EQ(BigInt(static_cast<unsigned long>(monomial_count(n, d))), binomial(static_cast<long>(d + n - 1), static_cast<long>(n - 1)));
    }
}

TEST(Oracle, SingleSubspaceMatchesQuotientCount) {
  // I_d for one k-dimensional subspace: all forms minus those of k variables.
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const auto a = random_arrangement(n, {k}, 100 * n + k);
      for (std::size_t d = 0; d <= 5; ++d) {
        const std::size_t expected = monomial_count(n, d) - monomial_count(k, d);
        EXPECT_EQ(dim_intersection_ideal(a, 1, d), expected);
        EXPECT_EQ(dim_product_ideal(a, 1, d), expected);
      }
    }
}

TEST(Oracle, EmptySubsetIsWholeRing) {
  const auto a = fixtures::coordinate_axes();
  for (std::size_t d = 0; d <= 4; ++d) {
    EXPECT_EQ(dim_intersection_ideal(a, 0, d), monomial_count(3, d));
    EXPECT_EQ(dim_product_ideal(a, 0, d), monomial_count(3, d));
  }
}

TEST(Oracle, ReferenceTables) {
  const auto axes = hilbert_table(fixtures::coordinate_axes(), 5);
  const auto points = hilbert_table(fixtures::collinear_points(), 5);
  const std::vector<std::size_t> axes_I{0, 0, 3, 7, 12, 18};
  const std::vector<std::size_t> points_I{0, 1, 3, 7, 12, 18};
  const std::vector<std::size_t> J{0, 0, 0, 7, 12, 18};
  for (std::size_t d = 0; d <= 5; ++d) {
    EXPECT_EQ(axes[d].degree, d);
    EXPECT_EQ(axes[d].dim_I, axes_I[d]);
    EXPECT_EQ(axes[d].dim_J, J[d]);
    EXPECT_EQ(points[d].dim_I, points_I[d]);
    EXPECT_EQ(points[d].dim_J, J[d]);
  }
}

TEST(Oracle, IntersectionAgreesWithPointEvaluation) {
  // Independent route: forms vanishing on enough generic sample points of
  // every subspace.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_instance(rng);
    const std::size_t d_max = a.size() + 2;
    const auto cloud = sample_points(a, monomial_count(a.ambient_dim() - 1, d_max) + 3, rng(), 7);
    for (std::size_t d = 0; d <= d_max; ++d)
      EXPECT_EQ(dim_intersection_ideal(a, full_subset(a.size()), d), estimate_hilbert_value(cloud, d)) << "trial " << trial;
  }
}

TEST(Oracle, ProductInsideIntersectionAndMonotone) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_instance(rng);
    const SubsetMask all = full_subset(a.size());
    for (std::size_t d = 0; d <= 5; ++d) {
      EXPECT_LE(dim_product_ideal(a, all, d), dim_intersection_ideal(a, all, d));
      for (SubsetMask s = 0; s < all; ++s)
        if ((s & all) == s) EXPECT_GE(dim_intersection_ideal(a, s, d), dim_intersection_ideal(a, all, d));
    }
  }
}

TEST(Oracle, ParallelTableMatchesSequential) {
  const auto a = fixtures::spanning_planes();
  EXPECT_EQ(hilbert_table(a, 6, {}, 1), hilbert_table(a, 6, {}, 3));
  EXPECT_EQ(hilbert_table(a, 6, {}, 1), hilbert_table(a, 6, {}, 16));
}

TEST(Oracle, MonomialCapIsEnforced) {
  const auto a = fixtures::spanning_planes();
  EXPECT_THROW(dim_intersection_ideal(a, 7, 6, Limits{.max_monomials = 50}), LimitError);
  EXPECT_THROW(hilbert_table(a, 6, Limits{.max_monomials = 50}), LimitError);
  EXPECT_NO_THROW(hilbert_table(a, 3, Limits{.max_monomials = 50}));
}
