// Subspace arrangements and their dimension functions S -> dim of the
// intersection of the subspaces indexed by S.
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ahilb/limits.hpp"
#include "ahilb/linalg.hpp"

namespace ahilb {

/// Subsets of {0..m-1} encoded as bitmasks.
using SubsetMask = std::uint32_t;

inline std::size_t subset_size(SubsetMask s) { return static_cast<std::size_t>(std::popcount(s)); }

inline SubsetMask full_subset(std::size_t m) { return m >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << m) - 1; }

/// Ambient dimension n and m >= 1 proper subspaces of Q^n.
class Arrangement {
 public:
  Arrangement(std::size_t ambient_dim, std::vector<SubspaceBasis> subspaces, const Limits& limits = {})
      : ambient_dim_(ambient_dim), subspaces_(std::move(subspaces)) {
    if (ambient_dim_ == 0) throw ValidationError("arrangement: ambient dimension must be at least 1");
    if (subspaces_.empty()) throw ValidationError("arrangement: at least one subspace is required");
    if (subspaces_.size() > limits.max_subspaces || subspaces_.size() > 31)
      throw LimitError("arrangement: " + std::to_string(subspaces_.size()) + " subspaces exceeds the cap of " +
                       std::to_string(std::min<std::size_t>(limits.max_subspaces, 31)));
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
      const auto& s = subspaces_[i];
      if (s.ambient_dim() != ambient_dim_)
        throw ValidationError("arrangement: subspace " + std::to_string(i + 1) + " lives in dimension " +
                              std::to_string(s.ambient_dim()) + ", expected " + std::to_string(ambient_dim_));
      if (s.dim() >= ambient_dim_)
        throw ValidationError("arrangement: subspace " + std::to_string(i + 1) +
                              " is the whole ambient space; only proper subspaces are allowed");
    }
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t size() const { return subspaces_.size(); }
  [[nodiscard]] const SubspaceBasis& subspace(std::size_t i) const { return subspaces_.at(i); }
  [[nodiscard]] const std::vector<SubspaceBasis>& subspaces() const { return subspaces_; }

 private:
  std::size_t ambient_dim_;
  std::vector<SubspaceBasis> subspaces_;
};

/// n_S for every S, stored by bitmask; c_S = n - n_S.
class DimensionFunction {
 public:
  /// `dims` has 2^m entries with dims[0] == n. Checks monotonicity and that
  /// every singleton is a proper subspace.
  DimensionFunction(std::size_t ambient_dim, std::size_t subspace_count, std::vector<std::size_t> dims)
      : n_(ambient_dim), m_(subspace_count), dims_(std::move(dims)) {
    if (m_ == 0 || m_ > 31 || dims_.size() != (std::size_t{1} << m_))
      throw ValidationError("dimension function: expected 2^m entries");
    if (dims_[0] != n_) throw ValidationError("dimension function: n of the empty set must equal n");
    for (SubsetMask s = 0; s < dims_.size(); ++s) {
      for (std::size_t i = 0; i < m_; ++i) {
        const SubsetMask bit = SubsetMask{1} << i;
        if ((s & bit) == 0 && dims_[s | bit] > dims_[s])
          throw ValidationError("dimension function: not monotone under inclusion");
      }
    }
    for (std::size_t i = 0; i < m_; ++i)
      if (dims_[SubsetMask{1} << i] >= n_) throw ValidationError("dimension function: subspace is not proper");
  }

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t size() const { return m_; }
  [[nodiscard]] SubsetMask full() const { return full_subset(m_); }
  [[nodiscard]] std::size_t dim(SubsetMask s) const { return dims_.at(s); }
  [[nodiscard]] std::size_t codim(SubsetMask s) const { return n_ - dims_.at(s); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }

  [[nodiscard]] std::vector<std::size_t> singleton_codims() const {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < m_; ++i) c.push_back(codim(SubsetMask{1} << i));
    return c;
  }

  friend bool operator==(const DimensionFunction&, const DimensionFunction&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> dims_;
};

/// Intersections are built incrementally over the subset lattice:
/// V_S = V_{S minus its top element} ∩ V_top.
inline DimensionFunction dimension_function(const Arrangement& a, const Limits& limits = {}) {
  const std::size_t m = a.size();
  if (m > limits.max_subspaces)
    throw LimitError("dimension_function: 2^" + std::to_string(m) + " subsets exceeds the configured cap");
  const std::size_t count = std::size_t{1} << m;
  std::vector<SubspaceBasis> memo;
  memo.reserve(count);
  memo.push_back(SubspaceBasis::full(a.ambient_dim()));
  std::vector<std::size_t> dims(count);
  dims[0] = a.ambient_dim();
  for (SubsetMask s = 1; s < count; ++s) {
    const int top = std::bit_width(s) - 1;
    const SubsetMask rest = s & ~(SubsetMask{1} << top);
    memo.push_back(rest == 0 ? a.subspace(top).canonical() : intersect(memo[rest], a.subspace(top)));
    dims[s] = memo.back().dim();
  }
  return DimensionFunction(a.ambient_dim(), m, std::move(dims));
}

/// c_S == min(n, sum_{i in S} c_i) for every S.
inline bool is_transversal(const DimensionFunction& d) {
  const auto c = d.singleton_codims();
  for (SubsetMask s = 1; s <= d.full(); ++s) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (s & (SubsetMask{1} << i)) total += c[i];
    if (d.codim(s) != std::min(d.ambient_dim(), total)) return false;
  }
  return true;
}

/// Applies one invertible change of coordinates x -> g x to every subspace.
inline Arrangement transform(const Arrangement& a, const QMatrix& g) {
  if (g.rows() != a.ambient_dim() || g.cols() != a.ambient_dim() || rank(g) != a.ambient_dim())
    throw std::invalid_argument("transform: need an invertible n x n matrix");
  std::vector<SubspaceBasis> out;
  for (const auto& s : a.subspaces()) {
    std::vector<QVector> vs;
    for (const auto& v : s.vectors()) vs.push_back(g * v);
    out.emplace_back(a.ambient_dim(), std::move(vs));
  }
  return Arrangement(a.ambient_dim(), std::move(out), Limits{.max_subspaces = 31});
}

/// Subspaces spanned by vectors with entries in [-max_entry, max_entry]
/// drawn from a seeded mt19937_64. Bases are redrawn until independent.
inline Arrangement random_arrangement(std::size_t ambient_dim, const std::vector<std::size_t>& dims, std::uint64_t seed,
                                      long max_entry = 3) {
  for (std::size_t k : dims)
    if (k == 0 || k >= ambient_dim)
      throw std::invalid_argument("random_arrangement: every dimension must lie in 1..n-1");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * max_entry + 1);
  std::vector<SubspaceBasis> subspaces;
  for (std::size_t k : dims) {
    bool done = false;
    for (int attempt = 0; attempt < 100 && !done; ++attempt) {
      std::vector<QVector> vs(k, QVector(ambient_dim));
      for (auto& v : vs)
        for (auto& x : v) x = static_cast<long>(rng() % span) - max_entry;
      if (rank(QMatrix::from_rows(vs, ambient_dim)) == k) {
        subspaces.emplace_back(ambient_dim, std::move(vs));
        done = true;
      }
    }
    if (!done) throw std::runtime_error("random_arrangement: could not draw a full-rank basis");
  }
  return Arrangement(ambient_dim, std::move(subspaces), Limits{.max_subspaces = 31});
}

}  // namespace ahilb
