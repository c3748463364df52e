// Subspace-dimension recovery for GPCA: estimate Hilbert-function values of
// the vanishing ideal from sample points, then read the codimension multiset
// off the Hilbert polynomial of a transversal arrangement.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ahilb/arrangement.hpp"
#include "ahilb/hilbert.hpp"
#include "ahilb/linalg.hpp"
#include "ahilb/oracle.hpp"

namespace ahilb {

/// Input values that no transversal arrangement with the given m and n
/// could have produced.
class InconsistentValuesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample points of Q^n, each spanning a ray. Either all exact or all float.
class PointCloud {
 public:
  using FVector = std::vector<double>;

  PointCloud(std::size_t ambient_dim, std::vector<QVector> points) : ambient_dim_(ambient_dim), points_(std::move(points)) {
    const auto& pts = std::get<std::vector<QVector>>(points_);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      check_length(pts[i].size(), i);
      if (std::all_of(pts[i].begin(), pts[i].end(), [](const Rational& x) { return x == 0; })) zero_point(i);
    }
  }

  PointCloud(std::size_t ambient_dim, std::vector<FVector> points) : ambient_dim_(ambient_dim), points_(std::move(points)) {
    const auto& pts = std::get<std::vector<FVector>>(points_);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      check_length(pts[i].size(), i);
      if (std::all_of(pts[i].begin(), pts[i].end(), [](double x) { return x == 0.0; })) zero_point(i);
    }
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] bool is_exact() const { return std::holds_alternative<std::vector<QVector>>(points_); }
  [[nodiscard]] std::size_t size() const {
    return std::visit([](const auto& p) { return p.size(); }, points_);
  }
  [[nodiscard]] bool empty() const { return size() == 0; }

  /// Exact coordinates; float clouds convert each double exactly.
  [[nodiscard]] std::vector<QVector> exact_points() const {
    if (is_exact()) return std::get<std::vector<QVector>>(points_);
    std::vector<QVector> out;
    for (const auto& p : std::get<std::vector<FVector>>(points_)) {
      QVector v;
      for (double x : p) v.emplace_back(x);
      out.push_back(std::move(v));
    }
    return out;
  }

  [[nodiscard]] std::vector<FVector> float_points() const {
    if (!is_exact()) return std::get<std::vector<FVector>>(points_);
    std::vector<FVector> out;
    for (const auto& p : std::get<std::vector<QVector>>(points_)) {
      FVector v;
      for (const auto& x : p) v.push_back(x.get_d());
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void check_length(std::size_t len, std::size_t i) const {
    if (len != ambient_dim_)
      throw ValidationError("point cloud: point " + std::to_string(i + 1) + " has " + std::to_string(len) +
                            " coordinates, expected " + std::to_string(ambient_dim_));
  }
  [[noreturn]] static void zero_point(std::size_t i) {
    throw ValidationError("point cloud: point " + std::to_string(i + 1) + " is the zero vector");
  }

  std::size_t ambient_dim_;
  std::variant<std::vector<QVector>, std::vector<FVector>> points_;
};

/// Exact rank over Q, or floating-point rank with a relative tolerance.
struct EstimationMode {
  bool exact = true;
  double tolerance = kDefaultRankTolerance;

  static EstimationMode exact_mode() { return {}; }
  static EstimationMode approx(double tol) { return {false, tol}; }
};

/// Dimension of the degree-d forms vanishing at every point:
/// #monomials - rank of the (points x monomials) evaluation matrix.
inline std::size_t estimate_hilbert_value(const PointCloud& pc, std::size_t d, EstimationMode mode = {}) {
  const MonomialBasis basis(pc.ambient_dim(), d);
  if (mode.exact) {
    IntegerEchelon echelon(basis.size());
    // Rescaling a point multiplies its row by a nonzero constant.
    for (const auto& p : pc.exact_points()) {
      if (echelon.full()) break;
      const auto x = IntegerEchelon::clear_denominators(p);
      std::vector<BigInt> row;
      row.reserve(basis.size());
      for (const auto& e : basis.monomials()) {
        BigInt v = 1;
        for (std::size_t j = 0; j < e.size(); ++j) {
          BigInt pw;
          mpz_pow_ui(pw.get_mpz_t(), x[j].get_mpz_t(), e[j]);
          v *= pw;
        }
        row.push_back(std::move(v));
      }
      echelon.add(std::move(row));
    }
    return basis.size() - echelon.rank();
  }
  const auto pts = pc.float_points();
  FMatrix m{pts.size(), basis.size(), std::vector<double>(pts.size() * basis.size())};
  for (std::size_t r = 0; r < pts.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      double v = 1;
      for (std::size_t j = 0; j < pts[r].size(); ++j)
        for (unsigned k = 0; k < basis[c][j]; ++k) v *= pts[r][j];
      m(r, c) = v;
    }
  }
  return basis.size() - approx_rank(std::move(m), mode.tolerance);
}

struct RecoveryResult {
  /// multiplicities[i] = number of subspaces of codimension i + 1, i < n - 1.
  std::vector<std::size_t> multiplicities;
  /// Sorted codimension multiset.
  std::vector<std::size_t> codims;
  /// Inputs h(m), ..., h(m + n - 1).
  std::vector<BigInt> values;
  HilbertPolynomial hilbert_polynomial{QPolynomial{}};
  /// Numerator of the Hilbert series modulo polynomials, in the basis
  /// C(d + n - 1 - j, n - 1).
  QPolynomial binomial_numerator;

  [[nodiscard]] std::vector<std::size_t> dims(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t c : codims) out.push_back(n - c);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Coefficients a_j with h~(d) = ∑_j a_j C(d + n - 1 - j, n - 1).
inline QPolynomial binomial_basis_coefficients(const QPolynomial& h, std::size_t n) {
  QMatrix system(n, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const QPolynomial basis = shifted_ring_hilbert_polynomial(n - 1, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) system(i, j) = basis.coeff(i);
  }
  if (h.degree() >= static_cast<long>(n)) throw std::invalid_argument("binomial_basis_coefficients: degree too large");
  for (std::size_t i = 0; i < n; ++i) system(i, n) = h.coeff(i);
  const auto r = rref(std::move(system));
  if (r.rank() != n || r.pivots.back() >= n) throw std::logic_error("binomial basis is singular");
  std::vector<Rational> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = r.reduced(j, n);
  return QPolynomial(std::move(a));
}

/// Recovers the codimensions c_1..c_m of a transversal arrangement in Q^n
/// from h_I(d) at d = m, ..., m + n - 1. Codimension n (the zero subspace)
/// is invisible to this procedure and shows up as a count mismatch.
inline RecoveryResult recover_codimensions(const std::vector<BigInt>& values, std::size_t m, std::size_t n) {
  if (n == 0 || m == 0) throw std::invalid_argument("recover_codimensions: m and n must be positive");
  if (values.size() != n)
    throw std::invalid_argument("recover_codimensions: expected " + std::to_string(n) + " values, got " +
                                std::to_string(values.size()));
  RecoveryResult result;
  result.values = values;

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t k = 0; k < n; ++k) {
    xs.emplace_back(static_cast<long>(m + k));
    ys.emplace_back(values[k]);
  }
  const QPolynomial h = interpolate(xs, ys);
  result.hilbert_polynomial = HilbertPolynomial(h);

  const QPolynomial a = binomial_basis_coefficients(h, n);
  if (!a.all_integer()) throw InconsistentValuesError("values are not those of an integer-valued Hilbert polynomial");
  result.binomial_numerator = a;

  const QPolynomial b = poly_mod_one_minus_t_pow(a, static_cast<unsigned>(n));
  // b(1 - t) ≡ ∏ (1 - t^{c_i}) mod t^n
  QSeries running = QSeries::from_polynomial(substitute_one_minus_t(b), n - 1);
  if (running[0] != 1)
    throw InconsistentValuesError("leading term of the product expansion is " + to_string(running[0]) + ", expected 1");
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const Rational r = -running[s + 1];
    if (!is_integer(r) || r < 0)
      throw InconsistentValuesError("multiplicity of codimension " + std::to_string(s + 1) + " would be " + to_string(r));
    const std::size_t count = r.get_num().get_ui();
    result.multiplicities.push_back(count);
    const QSeries factor = QSeries::from_polynomial(QPolynomial::constant(1) - QPolynomial::monomial(1, s + 1), n - 1);
    for (std::size_t k = 0; k < count; ++k) running = series_divide(running, factor);
    for (std::size_t k = 0; k < count; ++k) result.codims.push_back(s + 1);
  }
  const std::size_t total = std::accumulate(result.multiplicities.begin(), result.multiplicities.end(), std::size_t{0});
  if (total != m)
    throw InconsistentValuesError("recovered " + std::to_string(total) + " subspaces of codimension < n but m = " +
                                  std::to_string(m));
  return result;
}

/// Estimates h_I(m..m+n-1) from the cloud and recovers the codimensions.
inline RecoveryResult end_to_end_recover(const PointCloud& pc, std::size_t m, EstimationMode mode = {},
                                         const Limits& limits = {}) {
  if (pc.empty()) throw std::invalid_argument("end_to_end_recover: empty point cloud");
  const std::size_t n = pc.ambient_dim();
  detail::check_monomial_cap(n, m + n - 1, limits);
  std::vector<BigInt> values;
  for (std::size_t d = m; d < m + n; ++d) values.emplace_back(static_cast<unsigned long>(estimate_hilbert_value(pc, d, mode)));
  return recover_codimensions(values, m, n);
}

/// `per_subspace` random integer combinations (coefficients in
/// [-max_coeff, max_coeff], never all zero) of each subspace's basis.
inline PointCloud sample_points(const Arrangement& a, std::size_t per_subspace, std::uint64_t seed, long max_coeff = 5) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * max_coeff + 1);
  std::vector<QVector> points;
  for (const auto& s : a.subspaces()) {
    if (s.dim() == 0) continue;
    for (std::size_t p = 0; p < per_subspace; ++p) {
      QVector v(a.ambient_dim());
      bool zero = true;
      while (zero) {
        std::fill(v.begin(), v.end(), Rational(0));
        for (const auto& b : s.vectors()) {
          const Rational c(static_cast<long>(rng() % span) - max_coeff);
          for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
        }
        zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
      }
      points.push_back(std::move(v));
    }
  }
  return PointCloud(a.ambient_dim(), std::move(points));
}

}  // namespace ahilb
