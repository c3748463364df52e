#include <gtest/gtest.h>

#include <random>

#include "ahilb/fixtures.hpp"
#include "ahilb/hilbert.hpp"
#include "ahilb/oracle.hpp"

using namespace ahilb;

namespace {

QPolynomial poly(std::initializer_list<long> c) { return QPolynomial(c); }

// (1 - (1-t)^c) / t, the numerator of one ideal generated by c linear forms
// with the factor t stripped.
QPolynomial single_subspace_p(std::size_t c) {
  const QPolynomial num = QPolynomial::constant(1) - one_minus_t_pow(static_cast<unsigned>(c));
  std::vector<Rational> out(num.coeffs().begin() + 1, num.coeffs().end());
  return QPolynomial(std::move(out));
}

Arrangement random_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = 2 + rng() % (max_n - 1);
  const std::size_t m = 1 + rng() % max_m;
  std::vector<std::size_t> dims(m);
  for (auto& k : dims) k = 1 + rng() % (n - 1);
  return random_arrangement(n, dims, rng(), static_cast<long>(1 + rng() % 2));
}

}  // namespace

TEST(PSFamily, CoordinateAxes) {
  const auto family = compute_ps_family(dimension_function(fixtures::coordinate_axes()));
  EXPECT_EQ(family[0], poly({1}));
  for (SubsetMask s : {1U, 2U, 4U}) EXPECT_EQ(family[s], poly({2, -1}));
  for (SubsetMask s : {3U, 5U, 6U}) EXPECT_EQ(family[s], poly({4, -4, 1}));
  EXPECT_EQ(family[7], poly({7, -9, 3}));
}

TEST(PSFamily, SingletonMatchesLinearFormIdeal) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t c = 1; c < n; ++c) {
      const DimensionFunction d(n, 1, {n, n - c});
      EXPECT_EQ(compute_ps_family(d)[1], single_subspace_p(c)) << "n=" << n << " c=" << c;
    }
}

TEST(PSFamily, SatisfiesRecursionOnRandomArrangements) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = dimension_function(random_instance(rng, 6, 5));
    const auto family = compute_ps_family(d);
    EXPECT_TRUE(satisfies_recursion(d, family));
    for (SubsetMask s = 1; s <= d.full(); ++s) EXPECT_LT(family[s].degree(), static_cast<long>(d.codim(s)));
  }
}

TEST(PSFamily, RecursionCheckRejectsTampering) {
  const auto d = dimension_function(fixtures::coordinate_axes());
  auto polys = compute_ps_family(d).polys();
  polys[7] = poly({7, -9, 4});
  EXPECT_FALSE(satisfies_recursion(d, PSFamily(polys)));
}

TEST(HilbertSeriesJ, ReferenceArrangementsShareOneSeries) {
  for (const auto& [name, a] : fixtures::all()) {
    const auto hs = hilbert_series_J(dimension_function(a));
    EXPECT_EQ(hs.numerator(), poly({0, 0, 0, 7, -9, 3})) << name;
    EXPECT_EQ(betti_numbers(hs).betti, (std::vector<BigInt>{7, 9, 3})) << name;
  }
}

TEST(HilbertSeriesJ, MatchesProductIdealOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_instance(rng, 4, 3);
    const auto hs = hilbert_series_J(dimension_function(a));
    const std::size_t d_max = std::min<std::size_t>(6, a.size() + 3);
    const auto series = hs.series(d_max);
    for (std::size_t d = 0; d <= d_max; ++d)
      EXPECT_EQ(series[d], static_cast<unsigned long>(dim_product_ideal(a, full_subset(a.size()), d)))
          << "trial " << trial << " d=" << d;
  }
}

TEST(Betti, GradedEntriesSitOnTheLinearStrand) {
  const auto hs = hilbert_series_J(dimension_function(fixtures::coordinate_axes()));
  const auto g = betti_numbers(hs).graded();
  ASSERT_EQ(g.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(g[i].i, i);
    EXPECT_EQ(g[i].j, 3 + i);
  }
}

TEST(Betti, RejectsBadNumerators) {
  EXPECT_THROW(betti_numbers(HilbertSeriesJ{poly({1, 1}), 3, 1}), std::domain_error);
  EXPECT_THROW(betti_numbers(HilbertSeriesJ{QPolynomial(std::vector<Rational>{Rational(1, 2)}), 3, 1}), std::domain_error);
  EXPECT_EQ(betti_numbers(HilbertSeriesJ{poly({3, -3, 1}), 3, 1}).betti, (std::vector<BigInt>{3, 3, 1}));
}

TEST(TransversalSeries, Examples) {
  const std::vector<std::size_t> axes{2, 2, 2};
  const auto f = transversal_series(axes, 3);
  const auto hs = hilbert_series_J(dimension_function(fixtures::coordinate_axes()));
  EXPECT_TRUE(is_series_difference_polynomial(hs.rational_function(), f));
  // f - H(J) = t^3 exactly.
  const auto division = divmod(f.numerator - hs.numerator(), one_minus_t_pow(3));
  EXPECT_TRUE(division.remainder.is_zero());
  EXPECT_EQ(division.quotient, QPolynomial::monomial(1, 3));
  EXPECT_THROW(transversal_series(std::vector<std::size_t>{0}, 3), std::invalid_argument);
  EXPECT_THROW(transversal_series(std::vector<std::size_t>{4}, 3), std::invalid_argument);
}

TEST(TransversalSeries, NonTransversalDifferenceIsNotPolynomial) {
  const auto d = dimension_function(fixtures::spanning_planes());
  const auto f = transversal_series(d.singleton_codims(), 4);
  EXPECT_FALSE(is_series_difference_polynomial(hilbert_series_J(d).rational_function(), f));
  EXPECT_THROW(is_series_difference_polynomial(RationalFunction{poly({1}), 2}, RationalFunction{poly({1}), 3}),
               std::invalid_argument);
}

TEST(TransversalHilbertFunction, CoordinateAxes) {
  const std::vector<std::size_t> c{2, 2, 2};
  EXPECT_EQ(transversal_hilbert_function(c, 3, 3), 7);
  EXPECT_EQ(transversal_hilbert_function(c, 3, 4), 12);
  EXPECT_EQ(transversal_hilbert_function(c, 3, 5), 18);
  EXPECT_THROW(transversal_hilbert_function(c, 3, 2), std::invalid_argument);
}

TEST(TransversalHilbertFunction, MatchesOracleOnGenericArrangements) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    const auto a = random_instance(rng, 4, 3);
    const auto d = dimension_function(a);
    if (!is_transversal(d)) continue;
    ++checked;
    const auto codims = d.singleton_codims();
    const auto table = hilbert_table(a, a.size() + 2);
    for (std::size_t deg = a.size(); deg < table.size(); ++deg) {
      EXPECT_EQ(transversal_hilbert_function(codims, a.ambient_dim(), deg), static_cast<unsigned long>(table[deg].dim_I));
      EXPECT_EQ(table[deg].dim_I, table[deg].dim_J);
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(HilbertPolynomial, CoordinateAxes) {
  const auto hs = hilbert_series_J(dimension_function(fixtures::coordinate_axes()));
  const auto hp = hilbert_polynomial_from_numerator(hs.numerator(), 3);
  EXPECT_EQ(hp.coeffs(), QPolynomial(std::vector<Rational>{-2, Rational(3, 2), Rational(1, 2)}));
  for (long d = 3; d < 10; ++d) EXPECT_EQ(hp(d), Rational(d * d + 3 * d - 4) / 2);
}

TEST(HilbertPolynomial, StabilizesFromDegreeM) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = dimension_function(random_instance(rng, 6, 5));
    const auto hs = hilbert_series_J(d);
    const auto hp = hilbert_polynomial_from_numerator(hs.numerator(), d.ambient_dim());
    const auto series = hs.series(d.size() + 8);
    for (std::size_t deg = d.size(); deg <= d.size() + 8; ++deg) EXPECT_EQ(hp(static_cast<long>(deg)), series[deg]);
  }
}

TEST(HilbertPolynomial, ShiftedRingPolynomialCountsMonomials) {
  for (std::size_t k = 0; k < 5; ++k)
    for (long d = 0; d < 8; ++d)
      EXPECT_EQ(shifted_ring_hilbert_polynomial(k, 0)(Rational(d)), binomial(d + static_cast<long>(k), static_cast<long>(k)));
  EXPECT_THROW(hilbert_polynomial_from_numerator(poly({1}), 0), std::invalid_argument);
}

TEST(NumeratorFromHilbertFunction, RoundTrip) {
  const QPolynomial num = poly({0, 1, 0, 1, -1});
  const auto series = expand_rational(num, 4, 6);
  EXPECT_EQ(numerator_from_hilbert_function(series.coeffs(), 4), num);
}
