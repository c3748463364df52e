#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ahilb/fixtures.hpp"
#include "ahilb/gpca.hpp"

using namespace ahilb;

namespace {

std::vector<BigInt> values_for(const std::vector<std::size_t>& codims, std::size_t n) {
  std::vector<BigInt> out;
  for (std::size_t d = codims.size(); d < codims.size() + n; ++d) out.push_back(transversal_hilbert_function(codims, n, d));
  return out;
}

}  // namespace

TEST(Recover, CoordinateAxes) {
  const auto r = recover_codimensions({7, 12, 18}, 3, 3);
  EXPECT_EQ(r.codims, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(r.multiplicities, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(r.dims(3), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(r.hilbert_polynomial.coeffs(), QPolynomial(std::vector<Rational>{-2, Rational(3, 2), Rational(1, 2)}));
}

TEST(Recover, MixedCodimensions) {
  // A plane and a line in Q^4 plus a hyperplane.
  const std::vector<std::size_t> c{1, 2, 3};
  const auto r = recover_codimensions(values_for(c, 4), 3, 4);
  EXPECT_EQ(r.codims, c);
}

TEST(Recover, RejectsInconsistentValues) {
  EXPECT_THROW(recover_codimensions({1, 1, 1}, 3, 3), InconsistentValuesError);
  // Right values, wrong m.
  EXPECT_THROW(recover_codimensions({7, 12, 18}, 2, 3), InconsistentValuesError);
  EXPECT_THROW(recover_codimensions({7, 12}, 3, 3), std::invalid_argument);
  EXPECT_THROW(recover_codimensions({}, 0, 0), std::invalid_argument);
}

TEST(Recover, RoundTripOverRandomCodimensions) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t m = 1 + rng() % 5;
    std::vector<std::size_t> c(m);
    for (auto& x : c) x = 1 + rng() % (n - 1);
    std::sort(c.begin(), c.end());
    EXPECT_EQ(recover_codimensions(values_for(c, n), m, n).codims, c) << "trial " << trial;
  }
}

TEST(BinomialBasis, ReproducesHilbertPolynomial) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Rational> coeffs;
    for (std::size_t j = 0; j < n; ++j) coeffs.emplace_back(static_cast<long>(j * j) - 2);
    const QPolynomial a(coeffs);
    QPolynomial h;
    for (std::size_t j = 0; j < n; ++j) h += shifted_ring_hilbert_polynomial(n - 1, static_cast<long>(j)) * a.coeff(j);
    EXPECT_EQ(binomial_basis_coefficients(h, n), a);
  }
}

TEST(PointCloud, Validation) {
  EXPECT_THROW(PointCloud(3, std::vector<QVector>{{1, 0}}), ValidationError);
  EXPECT_THROW(PointCloud(2, std::vector<QVector>{{0, 0}}), ValidationError);
  EXPECT_THROW(PointCloud(2, std::vector<PointCloud::FVector>{{0.0, 0.0}}), ValidationError);
  EXPECT_THROW(end_to_end_recover(PointCloud(2, std::vector<QVector>{}), 1), std::invalid_argument);
}

TEST(Estimate, CoordinateAxesExactAndApprox) {
  const auto cloud = sample_points(fixtures::coordinate_axes(), 10, 1);
  EXPECT_EQ(cloud.size(), 30U);
  EXPECT_EQ(estimate_hilbert_value(cloud, 3), 7U);
  EXPECT_EQ(estimate_hilbert_value(cloud, 4), 12U);
  EXPECT_EQ(estimate_hilbert_value(cloud, 5), 18U);
  const auto approx = EstimationMode::approx(1e-9);
  for (std::size_t d = 3; d <= 5; ++d) EXPECT_EQ(estimate_hilbert_value(cloud, d, approx), estimate_hilbert_value(cloud, d));
  EXPECT_EQ(end_to_end_recover(cloud, 3).dims(3), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Estimate, ScalingPointsDoesNotChangeValues) {
  const auto cloud = sample_points(fixtures::spanning_planes(), 12, 2);
  std::vector<QVector> scaled = cloud.exact_points();
  for (std::size_t i = 0; i < scaled.size(); ++i)
    for (auto& x : scaled[i]) x *= Rational(static_cast<long>(i % 5) + 1, 3);
  const PointCloud other(4, scaled);
  for (std::size_t d = 0; d <= 4; ++d) EXPECT_EQ(estimate_hilbert_value(cloud, d), estimate_hilbert_value(other, d));
}

TEST(Estimate, NoisyPointsNeedTolerance) {
  auto pts = sample_points(fixtures::coordinate_axes(), 10, 1).float_points();
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> noise(-1e-12, 1e-12);
  for (auto& p : pts)
    for (auto& x : p) x += noise(rng);
  const PointCloud noisy(3, pts);
  EXPECT_EQ(end_to_end_recover(noisy, 3, EstimationMode::approx(1e-6)).dims(3), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_THROW(end_to_end_recover(noisy, 3, EstimationMode::exact_mode()), InconsistentValuesError);
}

TEST(Recover, NonTransversalInputIsRejected) {
  // h_I of the coplanar planes is not the Hilbert function of any transversal
  // arrangement of three subspaces of Q^4.
  const auto cloud = sample_points(fixtures::coplanar_planes(), 20, 5);
  EXPECT_THROW(end_to_end_recover(cloud, 3), InconsistentValuesError);
}
