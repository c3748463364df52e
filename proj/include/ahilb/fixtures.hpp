// Small reference arrangements with hand-checkable invariants. The JSON files
// under fixtures/ describe the same arrangements.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ahilb/arrangement.hpp"

namespace ahilb::fixtures {

namespace detail {

inline Arrangement make(std::size_t n, std::initializer_list<std::initializer_list<std::initializer_list<long>>> spans) {
  std::vector<SubspaceBasis> subspaces;
  for (const auto& span : spans) {
    std::vector<QVector> vs;
    for (const auto& v : span) {
      QVector q;
      for (long x : v) q.emplace_back(x);
      vs.push_back(std::move(q));
    }
    subspaces.emplace_back(n, std::move(vs));
  }
  return Arrangement(n, std::move(subspaces));
}

}  // namespace detail

/// Three coordinate lines of Q^3 (three non-collinear points of P^2).
inline Arrangement coordinate_axes() { return detail::make(3, {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}}); }

/// Three lines of Q^3 lying in one plane (three collinear points of P^2).
inline Arrangement collinear_points() { return detail::make(3, {{{1, 0, 0}}, {{0, 1, 0}}, {{1, 1, 0}}}); }

/// Planes span{e1,e4}, span{e2,e4}, span{e3,e4} of Q^4: pairwise meeting in a
/// line, together spanning Q^4.
inline Arrangement spanning_planes() {
  return detail::make(4, {{{1, 0, 0, 0}, {0, 0, 0, 1}}, {{0, 1, 0, 0}, {0, 0, 0, 1}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}});
}

/// Planes span{e2,e4}, span{e1,e4}, span{e1+e2,e4} of Q^4: same dimension
/// function as spanning_planes, but their sum is only 3-dimensional.
inline Arrangement coplanar_planes() {
  return detail::make(4, {{{0, 1, 0, 0}, {0, 0, 0, 1}}, {{1, 0, 0, 0}, {0, 0, 0, 1}}, {{1, 1, 0, 0}, {0, 0, 0, 1}}});
}

struct Named {
  std::string name;
  Arrangement arrangement;
};

inline std::vector<Named> all() {
  return {{"coordinate_axes", coordinate_axes()},
          {"collinear_points", collinear_points()},
          {"spanning_planes", spanning_planes()},
          {"coplanar_planes", coplanar_planes()}};
}

}  // namespace ahilb::fixtures
