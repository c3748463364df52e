// Brute-force graded-piece dimensions of I_S = ∩ I_i and J_S = ∏ I_i by exact
// linear algebra on monomial bases. Shares nothing with hilbert.hpp beyond
// the scalar and matrix layers, so it can be used to check those closed forms.
#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahilb/arrangement.hpp"
#include "ahilb/limits.hpp"
#include "ahilb/linalg.hpp"

namespace ahilb {

using Exponent = std::vector<unsigned>;

/// Number of monomials of degree d in n variables.
inline std::size_t monomial_count(std::size_t n, std::size_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  const BigInt c = binomial(static_cast<long>(d + n - 1), static_cast<long>(n - 1));
  if (!c.fits_ulong_p()) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(c.get_ui());
}

/// Degree-d monomials in n variables, graded-lex: x_1^d first, then
/// lexicographically decreasing exponent vectors.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, std::size_t d) : n_(n), d_(d) {
    Exponent e(n, 0);
    if (n == 0) {
      if (d == 0) monomials_.push_back(e);
    } else {
      fill(e, 0, static_cast<unsigned>(d));
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  [[nodiscard]] std::size_t variables() const { return n_; }
  [[nodiscard]] std::size_t degree() const { return d_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] const std::vector<Exponent>& monomials() const { return monomials_; }
  [[nodiscard]] const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  [[nodiscard]] std::size_t index_of(const Exponent& e) const { return index_.at(e); }

 private:
  void fill(Exponent& e, std::size_t var, unsigned remaining) {
    if (var + 1 == n_) {
      e[var] = remaining;
      monomials_.push_back(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[var] = k;
      fill(e, var + 1, remaining - k);
    }
    e[var] = 0;
  }

  std::size_t n_;
  std::size_t d_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

namespace detail {

/// Monomial bases of degrees 0..max_degree with "multiply by x_j" tables.
class GradedMonomials {
 public:
  GradedMonomials(std::size_t n, std::size_t max_degree) : n_(n) {
    for (std::size_t d = 0; d <= max_degree; ++d) bases_.emplace_back(n, d);
    times_var_.resize(max_degree);
    for (std::size_t d = 0; d < max_degree; ++d) {
      auto& table = times_var_[d];
      table.assign(n, std::vector<std::size_t>(bases_[d].size()));
      for (std::size_t i = 0; i < bases_[d].size(); ++i) {
        Exponent e = bases_[d][i];
        for (std::size_t j = 0; j < n; ++j) {
          ++e[j];
          table[j][i] = bases_[d + 1].index_of(e);
          --e[j];
        }
      }
    }
  }

  [[nodiscard]] std::size_t variables() const { return n_; }
  [[nodiscard]] const MonomialBasis& basis(std::size_t d) const { return bases_[d]; }
  [[nodiscard]] std::size_t times_var(std::size_t d, std::size_t j, std::size_t i) const { return times_var_[d][j][i]; }

  /// Dense homogeneous polynomial of degree d times a linear form.
  [[nodiscard]] std::vector<BigInt> times_linear(std::size_t d, const std::vector<BigInt>& poly,
                                                 const std::vector<BigInt>& form) const {
    std::vector<BigInt> out(bases_[d + 1].size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (form[j] != 0) out[times_var_[d][j][i]] += poly[i] * form[j];
    }
    return out;
  }

  /// Dense homogeneous polynomial of degree d times the monomial x^e.
  [[nodiscard]] std::vector<BigInt> times_monomial(std::size_t d, const std::vector<BigInt>& poly, const Exponent& e) const {
    std::vector<BigInt> out(poly);
    std::size_t deg = d;
    for (std::size_t j = 0; j < n_; ++j) {
      for (unsigned k = 0; k < e[j]; ++k) {
        std::vector<BigInt> next(bases_[deg + 1].size());
        for (std::size_t i = 0; i < out.size(); ++i)
          if (out[i] != 0) next[times_var_[deg][j][i]] = out[i];
        out = std::move(next);
        ++deg;
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<MonomialBasis> bases_;
  std::vector<std::vector<std::vector<std::size_t>>> times_var_;
};

inline void check_monomial_cap(std::size_t n, std::size_t d, const Limits& limits) {
  const std::size_t count = monomial_count(n, d);
  if (count > limits.max_monomials)
    throw LimitError("oracle: " + std::to_string(count) + " monomials of degree " + std::to_string(d) + " in " +
                     std::to_string(n) + " variables exceeds the cap of " + std::to_string(limits.max_monomials));
}

inline std::vector<std::vector<BigInt>> integer_rows(const std::vector<QVector>& vs) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& v : vs) out.push_back(IntegerEchelon::clear_denominators(v));
  return out;
}

}  // namespace detail

/// dim_Q of (∩_{i∈S} I_i)_d. Each x-monomial of degree d is pulled back along
/// the parametrisation x = B_i u of V_i; the degree-d piece of I_S is the
/// common kernel of these restriction maps.
inline std::size_t dim_intersection_ideal(const Arrangement& a, SubsetMask s, std::size_t d, const Limits& limits = {}) {
  const std::size_t n = a.ambient_dim();
  detail::check_monomial_cap(n, d, limits);
  const MonomialBasis target(n, d);
  IntegerEchelon echelon(target.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((s & (SubsetMask{1} << i)) == 0) continue;
    const auto basis = detail::integer_rows(a.subspace(i).vectors());
    const std::size_t k = basis.size();
    const detail::GradedMonomials params(k, d);
    // Coordinate x_j as a linear form in u: coefficient of u_l is basis[l][j].
    std::vector<std::vector<BigInt>> coord(n, std::vector<BigInt>(k));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < k; ++l) coord[j][l] = basis[l][j];
    // Images of all x-monomials degree by degree: x^a = x_j * x^{a - e_j}.
    std::vector<std::vector<BigInt>> images{{BigInt(1)}};
    for (std::size_t deg = 1; deg <= d; ++deg) {
      const MonomialBasis current(n, deg);
      const MonomialBasis previous(n, deg - 1);
      std::vector<std::vector<BigInt>> next;
      next.reserve(current.size());
      for (const auto& e : current.monomials()) {
        const auto j = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](unsigned x) { return x > 0; }) - e.begin());
        Exponent lower = e;
        --lower[j];
        const auto& prev = images[previous.index_of(lower)];
        next.push_back(k == 0 ? std::vector<BigInt>{} : params.times_linear(deg - 1, prev, coord[j]));
      }
      images = std::move(next);
    }
    // One row per u-monomial, one column per x-monomial.
    const std::size_t row_count = params.basis(d).size();
    for (std::size_t r = 0; r < row_count && !echelon.full(); ++r) {
      std::vector<BigInt> row(target.size());
      for (std::size_t c = 0; c < target.size(); ++c) row[c] = images[c][r];
      echelon.add(std::move(row));
    }
  }
  return target.size() - echelon.rank();
}

/// dim_Q of (∏_{i∈S} I_i)_d: the span of f_{i_1}···f_{i_k}·x^a with f_i
/// running over linear forms vanishing on V_i. The degree-|S| products are
/// reduced to a basis one factor at a time before multiplying by monomials.
inline std::size_t dim_product_ideal(const Arrangement& a, SubsetMask s, std::size_t d, const Limits& limits = {}) {
  const std::size_t n = a.ambient_dim();
  detail::check_monomial_cap(n, d, limits);
  const std::size_t k = subset_size(s);
  if (k == 0) return monomial_count(n, d);
  if (d < k) return 0;
  const detail::GradedMonomials mons(n, d);
  std::vector<std::vector<BigInt>> generators{{BigInt(1)}};
  std::size_t deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((s & (SubsetMask{1} << i)) == 0) continue;
    const auto forms = detail::integer_rows(annihilator(a.subspace(i)));
    IntegerEchelon next(mons.basis(deg + 1).size());
    for (const auto& g : generators)
      for (const auto& f : forms) next.add(mons.times_linear(deg, g, f));
    generators = next.rows();
    ++deg;
  }
  IntegerEchelon span(mons.basis(d).size());
  for (const auto& e : mons.basis(d - k).monomials()) {
    for (const auto& g : generators) {
      if (span.full()) break;
      span.add(mons.times_monomial(k, g, e));
    }
  }
  return span.rank();
}

struct GradedPieceResult {
  std::size_t degree = 0;
  std::size_t dim_I = 0;
  std::size_t dim_J = 0;

  friend bool operator==(const GradedPieceResult&, const GradedPieceResult&) = default;
};

/// h_I(d) and h_J(d) for d = 0..d_max and S = all subspaces. With jobs > 1
/// the degrees are computed on that many worker threads.
inline std::vector<GradedPieceResult> hilbert_table(const Arrangement& a, std::size_t d_max, const Limits& limits = {},
                                                    std::size_t jobs = 1) {
  detail::check_monomial_cap(a.ambient_dim(), d_max, limits);
  const SubsetMask all = full_subset(a.size());
  auto cell = [&](std::size_t d) {
    return GradedPieceResult{d, dim_intersection_ideal(a, all, d, limits), dim_product_ideal(a, all, d, limits)};
  };
  std::vector<GradedPieceResult> table(d_max + 1);
  if (jobs <= 1) {
    for (std::size_t d = 0; d <= d_max; ++d) table[d] = cell(d);
    return table;
  }
  // Largest degrees first; they dominate the cost.
  for (std::size_t hi = d_max + 1; hi > 0;) {
    const std::size_t lo = hi > jobs ? hi - jobs : 0;
    std::vector<std::future<GradedPieceResult>> batch;
    for (std::size_t d = lo; d < hi; ++d) batch.push_back(std::async(std::launch::async, cell, d));
    for (std::size_t d = lo; d < hi; ++d) table[d] = batch[d - lo].get();
    hi = lo;
  }
  return table;
}

}  // namespace ahilb
