// Closed forms for the product ideal J = I_1 ... I_m and, for transversal
// arrangements, for the intersection ideal I = I_1 ∩ ... ∩ I_m.
//
// Everything here depends only on the dimension function. The Hilbert series
// of I for a non-transversal arrangement is not a function of that data and
// is therefore only available through the brute-force oracle.
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ahilb/arrangement.hpp"
#include "ahilb/ratpoly.hpp"

namespace ahilb {

/// p_S(t) for every subset S, indexed by bitmask. p_∅ = 1.
class PSFamily {
 public:
  explicit PSFamily(std::vector<QPolynomial> polys) : polys_(std::move(polys)) {}

  [[nodiscard]] const QPolynomial& operator[](SubsetMask s) const { return polys_.at(s); }
  [[nodiscard]] std::size_t subset_count() const { return polys_.size(); }
  [[nodiscard]] const std::vector<QPolynomial>& polys() const { return polys_; }

 private:
  std::vector<QPolynomial> polys_;
};

namespace detail {

/// ∑_{X ⊊ S} (-t)^{|X|} p_X
inline QPolynomial proper_subset_sum(const std::vector<QPolynomial>& ps, SubsetMask s) {
  QPolynomial acc;
  SubsetMask x = s;
  do {
    x = (x - 1) & s;
    const std::size_t k = subset_size(x);
    QPolynomial term = ps[x].shifted(k);
    if (k % 2 == 1) term *= Rational(-1);
    acc += term;
  } while (x != 0);
  return acc;
}

}  // namespace detail

/// Solves  ∑_{X ⊆ S} (-t)^{|X|} p_X ≡ 0 mod (1-t)^{c_S},  deg p_S < c_S
/// for every nonempty S. Submasks of S are numerically smaller than S, so a
/// plain increasing sweep visits subsets after all their proper subsets.
inline PSFamily compute_ps_family(const DimensionFunction& d) {
  const std::size_t count = std::size_t{1} << d.size();
  std::vector<QPolynomial> ps(count);
  ps[0] = QPolynomial::constant(1);
  // (t^{-1})^k mod (1-t)^c, keyed by (c, k).
  std::map<std::pair<std::size_t, std::size_t>, QPolynomial> inverse_powers;
  auto inverse_power = [&](std::size_t c, std::size_t k) -> const QPolynomial& {
    auto it = inverse_powers.find({c, k});
    if (it != inverse_powers.end()) return it->second;
    const auto cu = static_cast<unsigned>(c);
    const QPolynomial inv = inverse_of_t_mod(cu);
    QPolynomial acc = QPolynomial::constant(1);
    for (std::size_t i = 0; i < k; ++i) acc = poly_mod_one_minus_t_pow(acc * inv, cu);
    return inverse_powers.emplace(std::pair{c, k}, std::move(acc)).first->second;
  };
  for (SubsetMask s = 1; s < count; ++s) {
    const std::size_t c = d.codim(s);
    if (c == 0) throw std::logic_error("compute_ps_family: nonempty subset with codimension 0");
    const auto cu = static_cast<unsigned>(c);
    const std::size_t k = subset_size(s);
    // (-t)^k p_S ≡ -∑_{X⊊S} ...   =>   p_S ≡ (-1)^{k+1} t^{-k} ∑_{X⊊S} ...
    QPolynomial rhs = poly_mod_one_minus_t_pow(detail::proper_subset_sum(ps, s), cu);
    if (k % 2 == 0) rhs *= Rational(-1);
    ps[s] = poly_mod_one_minus_t_pow(rhs * inverse_power(c, k), cu);
  }
  return PSFamily(std::move(ps));
}

/// Checks the defining congruence and degree bound of every p_S directly.
inline bool satisfies_recursion(const DimensionFunction& d, const PSFamily& family) {
  if (family.subset_count() != (std::size_t{1} << d.size())) return false;
  if (!(family[0] == QPolynomial::constant(1))) return false;
  for (SubsetMask s = 1; s <= d.full(); ++s) {
    const auto c = static_cast<unsigned>(d.codim(s));
    if (family[s].degree() >= static_cast<long>(c)) return false;
    QPolynomial total = detail::proper_subset_sum(family.polys(), s);
    QPolynomial own = family[s].shifted(subset_size(s));
    if (subset_size(s) % 2 == 1) own *= Rational(-1);
    total += own;
    if (!poly_mod_one_minus_t_pow(total, c).is_zero()) return false;
  }
  return true;
}

/// H(J, t) = t^m p(t) / (1 - t)^n with p = p_{1..m}.
struct HilbertSeriesJ {
  QPolynomial p;
  std::size_t n = 0;
  std::size_t m = 0;

  [[nodiscard]] QPolynomial numerator() const { return p.shifted(m); }
  [[nodiscard]] RationalFunction rational_function() const { return {numerator(), static_cast<unsigned>(n)}; }
  /// h_J(0..order)
  [[nodiscard]] QSeries series(std::size_t order) const {
    return expand_rational(numerator(), static_cast<unsigned>(n), order);
  }

  friend bool operator==(const HilbertSeriesJ&, const HilbertSeriesJ&) = default;
};

inline HilbertSeriesJ hilbert_series_J(const DimensionFunction& d) {
  const PSFamily family = compute_ps_family(d);
  return {family[d.full()], d.ambient_dim(), d.size()};
}

/// Betti numbers of J. The resolution is linear, so beta_{i,j} is nonzero
/// only for j = m + i.
struct BettiTable {
  std::vector<BigInt> betti;
  std::size_t m = 0;

  [[nodiscard]] std::size_t length() const { return betti.size(); }
  /// (i, j, beta_{i,j}) for the nonzero graded entries.
  struct Graded {
    std::size_t i;
    std::size_t j;
    BigInt value;
  };
  [[nodiscard]] std::vector<Graded> graded() const {
    std::vector<Graded> out;
    for (std::size_t i = 0; i < betti.size(); ++i)
      if (betti[i] != 0) out.push_back({i, m + i, betti[i]});
    return out;
  }
};

/// beta_i = (-1)^i [t^i] p(t). Throws std::domain_error when p has a
/// non-integer coefficient or its signs do not alternate.
inline BettiTable betti_numbers(const HilbertSeriesJ& hs) {
  BettiTable table{{}, hs.m};
  for (std::size_t i = 0; i < hs.p.size(); ++i) {
    const Rational& c = hs.p.coeffs()[i];
    if (!is_integer(c)) throw std::domain_error("betti_numbers: non-integer coefficient of p(t) at t^" + std::to_string(i));
    const bool odd = i % 2 == 1;
    if (c != 0 && ((c < 0) != odd))
      throw std::domain_error("betti_numbers: coefficient of t^" + std::to_string(i) + " of p(t) has the wrong sign");
    table.betti.push_back(odd ? BigInt(-c.get_num()) : BigInt(c.get_num()));
  }
  return table;
}

/// f(t) = ∏ (1 - (1-t)^{c_i}) / (1-t)^n
inline RationalFunction transversal_series(std::span<const std::size_t> codims, std::size_t n) {
  QPolynomial num = QPolynomial::constant(1);
  for (std::size_t c : codims) {
    if (c < 1 || c > n) throw std::invalid_argument("transversal_series: codimensions must lie in 1..n");
    num = num * (QPolynomial::constant(1) - one_minus_t_pow(static_cast<unsigned>(c)));
  }
  return {std::move(num), static_cast<unsigned>(n)};
}

/// True iff a - b is a polynomial, i.e. (1-t)^n divides the difference of
/// the numerators.
inline bool is_series_difference_polynomial(const RationalFunction& a, const RationalFunction& b) {
  if (a.denom_power != b.denom_power)
    throw std::invalid_argument("is_series_difference_polynomial: denominators differ");
  return poly_mod_one_minus_t_pow(a.numerator - b.numerator, a.denom_power).is_zero();
}

/// h_I(d) = h_J(d) = ∑_{S : c_S < n} (-1)^{|S|} C(d+n-1-c_S, n-1-c_S) with
/// c_S = ∑_{i∈S} c_i, the empty set included. Requires d >= m.
inline BigInt transversal_hilbert_function(std::span<const std::size_t> codims, std::size_t n, std::size_t d) {
  const std::size_t m = codims.size();
  if (m == 0 || m > 31) throw std::invalid_argument("transversal_hilbert_function: need 1..31 codimensions");
  if (d < m) throw std::invalid_argument("transversal_hilbert_function: formula holds only for d >= m");
  BigInt total = 0;
  for (SubsetMask s = 0; s <= full_subset(m); ++s) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (SubsetMask{1} << i)) c += codims[i];
    if (c >= n) continue;
    const auto top = static_cast<long>(d + n - 1 - c);
    const auto bottom = static_cast<long>(n - 1 - c);
    if (subset_size(s) % 2 == 0)
      total += binomial(top, bottom);
    else
      total -= binomial(top, bottom);
  }
  return total;
}

/// Polynomial in d agreeing with the Hilbert function for large d.
class HilbertPolynomial {
 public:
  explicit HilbertPolynomial(QPolynomial coeffs) : coeffs_(std::move(coeffs)) {}

  [[nodiscard]] const QPolynomial& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational operator()(long d) const { return coeffs_(Rational(d)); }

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  QPolynomial coeffs_;
};

/// (x+k)(x+k-1)...(x+1)/k! as a polynomial in d with x = d - shift; this is
/// the Hilbert polynomial of the polynomial ring in k+1 variables, shifted.
inline QPolynomial shifted_ring_hilbert_polynomial(std::size_t k, long shift) {
  QPolynomial acc = QPolynomial::constant(1);
  BigInt factorial = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * QPolynomial(std::vector<Rational>{Rational(static_cast<long>(i) - shift), Rational(1)});
    factorial *= static_cast<unsigned long>(i);
  }
  return acc * Rational(BigInt(1), factorial);
}

/// h~(d) = ∑_j num_j · C~(d - j) for a series num(t)/(1-t)^n, n >= 1.
inline HilbertPolynomial hilbert_polynomial_from_numerator(const QPolynomial& numerator, std::size_t n) {
  if (n == 0) throw std::invalid_argument("hilbert_polynomial_from_numerator: n must be at least 1");
  QPolynomial acc;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (numerator.coeffs()[j] == 0) continue;
    acc += shifted_ring_hilbert_polynomial(n - 1, static_cast<long>(j)) * numerator.coeffs()[j];
  }
  return HilbertPolynomial(std::move(acc));
}

/// Numerator N with H(t) = N(t)/(1-t)^n, read off from h(0..D) as the
/// truncation of h(t)(1-t)^n to degree <= D. Exact whenever deg N <= D.
inline QPolynomial numerator_from_hilbert_function(std::span<const Rational> values, std::size_t n) {
  if (values.empty()) throw std::invalid_argument("numerator_from_hilbert_function: no values");
  QPolynomial series(std::vector<Rational>(values.begin(), values.end()));
  return (series * one_minus_t_pow(static_cast<unsigned>(n))).truncated(values.size());
}

}  // namespace ahilb
