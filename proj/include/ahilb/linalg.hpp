// Exact matrix algebra over Q plus one floating-point rank routine for noisy
// point clouds.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ahilb/ratpoly.hpp"

namespace ahilb {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// All rows must have length `cols`.
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }
  static QMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    QMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
      std::size_t c = 0;
      for (long v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  }
  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] QVector row(std::size_t r) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
  }

  [[nodiscard]] QVector operator*(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("QMatrix * vector: dimension mismatch");
    QVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot search is leftmost column first, then the
/// first row at or below the current one with a nonzero entry.
inline RrefResult rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

// ---------------------------------------------------------------------------
// Incremental integer elimination, used where many rows are fed in and only
// the rank of their span matters.

/// Rows are kept primitive (content 1) and indexed by leading column.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t cols) : by_pivot_(cols) {}

  [[nodiscard]] std::size_t cols() const { return by_pivot_.size(); }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] bool full() const { return rank_ == by_pivot_.size(); }

  /// The held rows, ordered by leading column. They span everything added.
  [[nodiscard]] std::vector<std::vector<BigInt>> rows() const {
    std::vector<std::vector<BigInt>> out;
    for (const auto& r : by_pivot_)
      if (r) out.push_back(*r);
    return out;
  }

  /// Returns true when the row was independent of the rows already held.
  bool add(std::vector<BigInt> row) {
    if (row.size() != cols()) throw std::invalid_argument("IntegerEchelon::add: wrong row length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 0) continue;
      const auto& pivot = by_pivot_[c];
      if (!pivot) {
        make_primitive(row, c);
        by_pivot_[c] = std::move(row);
        ++rank_;
        return true;
      }
      const BigInt g = gcd((*pivot)[c], row[c]);
      const BigInt a = (*pivot)[c] / g;
      const BigInt b = row[c] / g;
      for (std::size_t k = c; k < row.size(); ++k) {
        row[k] *= a;
        row[k] -= b * (*pivot)[k];
      }
      make_primitive(row, c + 1);
    }
    return false;
  }

  bool add(std::span<const Rational> row) { return add(clear_denominators(row)); }

  static std::vector<BigInt> clear_denominators(std::span<const Rational> row) {
    BigInt l = 1;
    for (const auto& q : row) l = lcm(l, q.get_den());
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const auto& q : row) out.emplace_back(q.get_num() * (l / q.get_den()));
    return out;
  }

 private:
  static void make_primitive(std::vector<BigInt>& row, std::size_t from) {
    BigInt g = 0;
    for (std::size_t k = from; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      g = gcd(g, row[k]);
      if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t k = from; k < row.size(); ++k)
      if (row[k] != 0) mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), g.get_mpz_t());
  }

  std::vector<std::optional<std::vector<BigInt>>> by_pivot_;
  std::size_t rank_ = 0;
};

// ---------------------------------------------------------------------------
// Subspaces

/// Linearly independent spanning vectors of a subspace of Q^ambient_dim.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Throws std::invalid_argument when lengths disagree or the vectors are
  /// dependent.
  SubspaceBasis(std::size_t ambient_dim, std::vector<QVector> vectors)
      : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
      if (v.size() != ambient_dim_) throw std::invalid_argument("SubspaceBasis: vector length differs from ambient dimension");
    if (vectors_.size() > ambient_dim_ || rank(QMatrix::from_rows(vectors_, ambient_dim_)) != vectors_.size())
      throw std::invalid_argument("SubspaceBasis: vectors are linearly dependent");
  }

  /// Canonical (RREF) basis of the span of arbitrary vectors.
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const QVector> vectors) {
    SubspaceBasis s(ambient_dim);
    if (vectors.empty()) return s;
    auto r = rref(QMatrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < r.rank(); ++i) s.vectors_.push_back(r.reduced.row(i));
    return s;
  }

  static SubspaceBasis full(std::size_t ambient_dim) {
    SubspaceBasis s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      QVector e(ambient_dim);
      e[i] = 1;
      s.vectors_.push_back(std::move(e));
    }
    return s;
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return vectors_.size(); }
  [[nodiscard]] const std::vector<QVector>& vectors() const { return vectors_; }

  /// Rows are the basis vectors.
  [[nodiscard]] QMatrix as_rows() const { return QMatrix::from_rows(vectors_, ambient_dim_); }

  [[nodiscard]] bool contains(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("SubspaceBasis::contains: dimension mismatch");
    std::vector<QVector> rows = vectors_;
    rows.emplace_back(v.begin(), v.end());
    return rank(QMatrix::from_rows(rows, ambient_dim_)) == vectors_.size();
  }

  [[nodiscard]] SubspaceBasis canonical() const { return span(ambient_dim_, vectors_); }

 private:
  std::size_t ambient_dim_;
  std::vector<QVector> vectors_;
};

inline bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
  return std::all_of(b.vectors().begin(), b.vectors().end(), [&](const QVector& v) { return a.contains(v); });
}

/// Null space {x : m x = 0}, one basis vector per free column.
inline SubspaceBasis kernel(const QMatrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  SubspaceBasis out(m.cols());
  return basis.empty() ? out : SubspaceBasis(m.cols(), std::move(basis));
}

inline SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<QVector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

/// a ∩ b in canonical form. Solves A*alpha = B*beta through the kernel of
/// the block matrix [A | -B].
inline SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  if (ka == 0 || kb == 0) return SubspaceBasis(n);
  QMatrix block(n, ka + kb);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ka; ++j) block(i, j) = a.vectors()[j][i];
    for (std::size_t j = 0; j < kb; ++j) block(i, ka + j) = -b.vectors()[j][i];
  }
  const SubspaceBasis coeffs = kernel(block);
  std::vector<QVector> images;
  for (const auto& alpha : coeffs.vectors()) {
    QVector x(n);
    for (std::size_t j = 0; j < ka; ++j) {
      if (alpha[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) x[i] += alpha[j] * a.vectors()[j][i];
    }
    images.push_back(std::move(x));
  }
  return SubspaceBasis::span(n, images);
}

/// Linear forms (as coefficient vectors) vanishing on s; there are
/// ambient_dim - dim(s) of them.
inline std::vector<QVector> annihilator(const SubspaceBasis& s) {
  if (s.dim() == 0) return SubspaceBasis::full(s.ambient_dim()).vectors();
  return kernel(s.as_rows()).vectors();
}

// ---------------------------------------------------------------------------
// Floating point

struct FMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> entries;  // row-major

  double& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

inline constexpr double kDefaultRankTolerance = 1e-8;

/// Rank by Gaussian elimination with partial pivoting. A pivot counts when
/// its magnitude exceeds rel_tol times the largest magnitude in the input.
inline std::size_t approx_rank(FMatrix m, double rel_tol = kDefaultRankTolerance) {
  if (!(rel_tol > 0)) throw std::invalid_argument("approx_rank: tolerance must be positive");
  double scale = 0;
  for (double v : m.entries) scale = std::max(scale, std::abs(v));
  if (scale == 0) return 0;
  const double threshold = rel_tol * scale;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank + 1; r < m.rows; ++r)
      if (std::abs(m(r, c)) > std::abs(m(best, c))) best = r;
    if (std::abs(m(best, c)) <= threshold) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(best, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const double f = m(r, c) / m(rank, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < m.cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace ahilb
