// Exact rational scalars, dense univariate polynomials and truncated power
// series. Everything above this layer is built on these three types.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ahilb {

using BigInt = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Scalars

/// Parses "a" or "a/b" (b > 0 after sign normalisation). Throws
/// std::invalid_argument on anything else, including decimal notation.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
  BigInt n(num_s, 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// C(a, b) with C(a, b) = 0 whenever a < 0, b < 0 or a < b.
inline BigInt binomial(long a, long b) {
  BigInt r;
  if (a < 0 || b < 0 || a < b) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials

/// Dense polynomial over Q in one variable. Canonical form has no trailing
/// zero coefficient; the zero polynomial has no coefficients at all.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static QPolynomial constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }

  static QPolynomial monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPolynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  [[nodiscard]] Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Multiplication by t^k.
  [[nodiscard]] QPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return QPolynomial(std::move(v));
  }

  /// Keeps terms of degree < k.
  [[nodiscard]] QPolynomial truncated(std::size_t k) const {
    if (k >= coeffs_.size()) return *this;
    return QPolynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  [[nodiscard]] bool all_integer() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  QPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }
  friend QPolynomial operator-(QPolynomial a) { return a *= Rational(-1); }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline QPolynomial pow(QPolynomial base, unsigned exponent) {
  QPolynomial result = QPolynomial::constant(1);
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

/// (1 - t)^k
inline QPolynomial one_minus_t_pow(unsigned k) {
  std::vector<Rational> v(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    v[j] = binomial(k, j);
    if (j % 2 == 1) v[j] = -v[j];
  }
  return QPolynomial(std::move(v));
}

struct PolyDivision {
  QPolynomial quotient;
  QPolynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
inline PolyDivision divmod(const QPolynomial& p, const QPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = p.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {QPolynomial{}, p};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = 1 / d.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rational q = rem[k] * lead_inv;
    quot[k - dd] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d[j];
  }
  rem.resize(dd);
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

/// Remainder of p modulo (1 - t)^k, of degree < k.
inline QPolynomial poly_mod_one_minus_t_pow(const QPolynomial& p, unsigned k) {
  if (k == 0) return {};
  return divmod(p, one_minus_t_pow(k)).remainder;
}

/// The unique q of degree < k with t*q == 1 mod (1 - t)^k, namely
/// sum_{j<k} (1 - t)^j.
inline QPolynomial inverse_of_t_mod(unsigned k) {
  if (k == 0) throw std::invalid_argument("inverse_of_t_mod: t has no inverse modulo 1");
  QPolynomial q;
  QPolynomial term = QPolynomial::constant(1);
  const QPolynomial one_minus_t{1, -1};
  for (unsigned j = 0; j < k; ++j) {
    q += term;
    term = term * one_minus_t;
  }
  return q;
}

/// p(1 - t), expanded.
inline QPolynomial substitute_one_minus_t(const QPolynomial& p) {
  // Horner in the substituted variable.
  const QPolynomial u{1, -1};
  QPolynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + QPolynomial::constant(*it);
  return acc;
}

/// Unique polynomial of degree < xs.size() through the given points (Newton
/// divided differences). Abscissae must be distinct.
inline QPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  QPolynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * QPolynomial(std::vector<Rational>{-xs[i], Rational(1)}) + QPolynomial::constant(dd[i]);
  }
  return result;
}

/// Ascending-degree rendering with explicit signs, e.g. "7t^3 - 9t^4 + 3t^5".
inline std::string to_string(const QPolynomial& p, std::string_view var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c = p.coeffs()[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    const bool show_coeff = i == 0 || c != 1;
    if (show_coeff) {
      if (is_integer(c) || i == 0)
        out << c.get_str();
      else
        out << '(' << c.get_str() << ')';
    }
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_string(p); }

/// numerator(t) / (1 - t)^denom_power
struct RationalFunction {
  QPolynomial numerator;
  unsigned denom_power = 0;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

// ---------------------------------------------------------------------------
// Truncated power series

/// Coefficients of t^0..t^order. Arithmetic never looks past `order`.
class QSeries {
 public:
  explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
  QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
    if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
  }

  static QSeries from_polynomial(const QPolynomial& p, std::size_t order) {
    QSeries s(order);
    for (std::size_t i = 0; i <= order && i < p.size(); ++i) s.coeffs_[i] = p.coeffs()[i];
    return s;
  }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  [[nodiscard]] QPolynomial to_polynomial() const { return QPolynomial(coeffs_); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    QSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Expansion of numerator(t) / (1 - t)^denom_power through t^order.
inline QSeries expand_rational(const QPolynomial& numerator, unsigned denom_power, std::size_t order) {
  QSeries s = QSeries::from_polynomial(numerator, order);
  // Each factor 1/(1 - t) is a running prefix sum.
  for (unsigned k = 0; k < denom_power; ++k)
    for (std::size_t i = 1; i <= order; ++i) s[i] += s[i - 1];
  return s;
}

inline QSeries expand_rational(const RationalFunction& f, std::size_t order) {
  return expand_rational(f.numerator, f.denom_power, order);
}

/// Truncated quotient a / b; b must have a nonzero constant term.
inline QSeries series_divide(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series_divide: order mismatch");
  if (b[0] == 0) throw std::domain_error("series_divide: divisor has zero constant term");
  const Rational inv = 1 / b[0];
  QSeries q(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) {
    Rational acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc * inv;
  }
  return q;
}

}  // namespace ahilb
