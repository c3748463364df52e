// JSON file formats for arrangements and point clouds.
//
//   {"name": "axes", "n": 3, "subspaces": [[["1","0","0"]], [["0","1","0"]], ...]}
//   {"n": 3, "points": [["1","0","0"], ["0","2","0"], ...]}
//
// Each subspace is a list of spanning vectors (an empty list is the zero
// subspace). Coordinates are rational strings "a" or "a/b"; JSON integers are
// also accepted. Floats are rejected except in point clouds read with
// allow_floats.
#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ahilb/arrangement.hpp"
#include "ahilb/gpca.hpp"
#include "ahilb/limits.hpp"

namespace ahilb::io {

using nlohmann::json;

/// Malformed input file; the message names the line/column or the JSON path.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct NamedArrangement {
  std::string name;
  Arrangement arrangement;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what);
}

inline const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) fail(key, "missing");
  return obj.at(key);
}

inline std::size_t natural(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

inline Rational rational(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(BigInt(v.dump(), 10));
  if (v.is_number_float()) fail(path, "floating-point value; write rationals as strings such as \"3/2\"");
  fail(path, "expected a rational string");
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline NamedArrangement parse_arrangement(const json& doc, const Limits& limits = {}) {
  using detail::fail;
  if (!doc.is_object()) fail("$", "expected an object");
  std::string name = "arrangement";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const std::size_t n = detail::natural(detail::require(doc, "n"), "n");
  const json& subs = detail::require(doc, "subspaces");
  if (!subs.is_array()) fail("subspaces", "expected an array");
  if (subs.size() > limits.max_subspaces)
    throw LimitError("arrangement has " + std::to_string(subs.size()) + " subspaces; the cap is " +
                     std::to_string(limits.max_subspaces));
  std::vector<SubspaceBasis> subspaces;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string sp = "subspaces[" + std::to_string(i) + "]";
    if (!subs[i].is_array()) fail(sp, "expected an array of vectors");
    std::vector<QVector> vectors;
    for (std::size_t j = 0; j < subs[i].size(); ++j) {
      const std::string vp = sp + "[" + std::to_string(j) + "]";
      const json& v = subs[i][j];
      if (!v.is_array()) fail(vp, "expected an array of coordinates");
      if (v.size() != n) fail(vp, "has " + std::to_string(v.size()) + " coordinates, expected n = " + std::to_string(n));
      QVector q;
      for (std::size_t k = 0; k < v.size(); ++k) q.push_back(detail::rational(v[k], vp + "[" + std::to_string(k) + "]"));
      vectors.push_back(std::move(q));
    }
    subspaces.push_back(SubspaceBasis::span(n, vectors));
  }
  return {std::move(name), Arrangement(n, std::move(subspaces), limits)};
}

inline NamedArrangement parse_arrangement(const std::string& text, const Limits& limits = {}) {
  return parse_arrangement(detail::parse_text(text), limits);
}

inline NamedArrangement load_arrangement(const std::string& path, const Limits& limits = {}) {
  return parse_arrangement(detail::read_file(path), limits);
}

inline json arrangement_to_json(const std::string& name, const Arrangement& a) {
  json subs = json::array();
  for (const auto& s : a.subspaces()) {
    json vs = json::array();
    for (const auto& v : s.vectors()) {
      json coords = json::array();
      for (const auto& x : v) coords.push_back(to_string(x));
      vs.push_back(std::move(coords));
    }
    subs.push_back(std::move(vs));
  }
  return json{{"name", name}, {"n", a.ambient_dim()}, {"subspaces", std::move(subs)}};
}

/// Float coordinates are accepted only with allow_floats; a cloud containing
/// any float is read entirely in floating point.
inline PointCloud parse_point_cloud(const json& doc, bool allow_floats) {
  using detail::fail;
  if (!doc.is_object()) fail("$", "expected an object");
  const std::size_t n = detail::natural(detail::require(doc, "n"), "n");
  const json& pts = detail::require(doc, "points");
  if (!pts.is_array()) fail("points", "expected an array");
  bool any_float = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pp = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array()) fail(pp, "expected an array of coordinates");
    if (pts[i].size() != n) fail(pp, "has " + std::to_string(pts[i].size()) + " coordinates, expected n = " + std::to_string(n));
    for (std::size_t k = 0; k < pts[i].size(); ++k)
      if (pts[i][k].is_number_float()) {
        if (!allow_floats)
          fail(pp + "[" + std::to_string(k) + "]", "floating-point coordinates require a tolerance (--tol)");
        any_float = true;
      }
  }
  if (any_float) {
    std::vector<PointCloud::FVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      PointCloud::FVector v;
      for (std::size_t k = 0; k < n; ++k) {
        const json& x = pts[i][k];
        const std::string xp = "points[" + std::to_string(i) + "][" + std::to_string(k) + "]";
        v.push_back(x.is_number() ? x.get<double>() : detail::rational(x, xp).get_d());
      }
      out.push_back(std::move(v));
    }
    return PointCloud(n, std::move(out));
  }
  std::vector<QVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    QVector v;
    for (std::size_t k = 0; k < n; ++k)
      v.push_back(detail::rational(pts[i][k], "points[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    out.push_back(std::move(v));
  }
  return PointCloud(n, std::move(out));
}

inline PointCloud load_point_cloud(const std::string& path, bool allow_floats) {
  return parse_point_cloud(detail::parse_text(detail::read_file(path)), allow_floats);
}

inline json point_cloud_to_json(const PointCloud& pc) {
  json pts = json::array();
  for (const auto& p : pc.exact_points()) {
    json coords = json::array();
    for (const auto& x : p) coords.push_back(to_string(x));
    pts.push_back(std::move(coords));
  }
  return json{{"n", pc.ambient_dim()}, {"points", std::move(pts)}};
}

}  // namespace ahilb::io
