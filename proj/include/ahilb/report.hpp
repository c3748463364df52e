// Report documents behind the command-line tool. Every report is built as a
// JSON document first; the text rendering is derived from that document so
// both modes carry the same numbers.
#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ahilb/arrangement.hpp"
#include "ahilb/fixtures.hpp"
#include "ahilb/gpca.hpp"
#include "ahilb/hilbert.hpp"
#include "ahilb/io.hpp"
#include "ahilb/oracle.hpp"

namespace ahilb::report {

using nlohmann::json;

// Integers that may outgrow 64 bits are written as decimal strings.
inline json poly_to_json(const QPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

inline QPolynomial poly_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QPolynomial(std::move(coeffs));
}

inline json subset_to_json(SubsetMask s, std::size_t m) {
  json out = json::array();
  for (std::size_t i = 0; i < m; ++i)
    if (s & (SubsetMask{1} << i)) out.push_back(i + 1);
  return out;
}

inline std::string subset_text(const json& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out += (i ? "," : "") + std::to_string(subset[i].get<std::size_t>());
  return out + "}";
}

struct AnalyzeOptions {
  /// Defaults to m + n - 1.
  std::optional<std::size_t> max_degree;
  bool oracle = false;
  std::size_t jobs = 1;
  Limits limits;
};

/// Closed-form invariants of the arrangement and, optionally, the
/// brute-force table with an agreement verdict.
inline json analyze(const std::string& name, const Arrangement& a, const AnalyzeOptions& opts = {}) {
  const DimensionFunction dims = dimension_function(a, opts.limits);
  const std::size_t n = a.ambient_dim();
  const std::size_t m = a.size();
  const std::size_t max_degree = opts.max_degree.value_or(m + n - 1);
  const bool transversal = is_transversal(dims);
  const PSFamily family = compute_ps_family(dims);
  const HilbertSeriesJ hs{family[dims.full()], n, m};
  const BettiTable betti = betti_numbers(hs);
  const HilbertPolynomial hp = hilbert_polynomial_from_numerator(hs.numerator(), n);
  const QSeries series = hs.series(max_degree);

  json doc;
  doc["name"] = name;
  doc["ambient_dim"] = n;
  doc["subspace_count"] = m;
  doc["transversal"] = transversal;

  json dimfn = json::array();
  json ps = json::array();
  for (SubsetMask s = 0; s <= dims.full(); ++s) {
    dimfn.push_back({{"subset", subset_to_json(s, m)}, {"dim", dims.dim(s)}, {"codim", dims.codim(s)}});
    if (s != 0) ps.push_back({{"subset", subset_to_json(s, m)}, {"p", poly_to_json(family[s])}});
  }
  doc["dimension_function"] = std::move(dimfn);
  doc["p_family"] = std::move(ps);

  doc["hilbert_series_J"] = {{"numerator", poly_to_json(hs.numerator())}, {"denominator_power", n}};
  json total = json::array();
  for (const auto& b : betti.betti) total.push_back(to_string(b));
  json graded = json::array();
  for (const auto& g : betti.graded()) graded.push_back({{"i", g.i}, {"j", g.j}, {"value", to_string(g.value)}});
  doc["betti_J"] = {{"total", std::move(total)}, {"graded", std::move(graded)}};
  doc["hilbert_polynomial_J"] = poly_to_json(hp.coeffs());
  json hf = json::array();
  for (std::size_t d = 0; d <= max_degree; ++d) hf.push_back(to_string(series[d]));
  doc["hilbert_function_J"] = std::move(hf);
  doc["max_degree"] = max_degree;

  std::vector<BigInt> binomial_sum;
  if (transversal) {
    const auto codims = dims.singleton_codims();
    const RationalFunction f = transversal_series(codims, n);
    json values = json::array();
    for (std::size_t d = m; d <= max_degree; ++d) {
      binomial_sum.push_back(transversal_hilbert_function(codims, n, d));
      values.push_back({{"d", d}, {"value", to_string(binomial_sum.back())}});
    }
    doc["transversal_data"] = {{"f_numerator", poly_to_json(f.numerator)},
                               {"f_denominator_power", f.denom_power},
                               {"J_minus_f_is_polynomial", is_series_difference_polynomial(hs.rational_function(), f)},
                               {"hilbert_function_I", std::move(values)}};
  }

  if (opts.oracle) {
    const auto table = hilbert_table(a, max_degree, opts.limits, opts.jobs);
    json rows = json::array();
    std::vector<std::string> problems;
    for (const auto& r : table) {
      rows.push_back({{"d", r.degree}, {"I", r.dim_I}, {"J", r.dim_J}});
      const std::string at = " at d = " + std::to_string(r.degree);
      if (series[r.degree] != static_cast<unsigned long>(r.dim_J)) problems.push_back("h_J closed form differs from brute force" + at);
      if (r.dim_J > r.dim_I) problems.push_back("dim J_d exceeds dim I_d" + at);
      if (transversal && r.degree >= m) {
        if (binomial_sum[r.degree - m] != static_cast<unsigned long>(r.dim_I))
          problems.push_back("binomial-sum h_I differs from brute force" + at);
        if (r.dim_I != r.dim_J) problems.push_back("h_I and h_J differ on a transversal arrangement" + at);
      }
    }
    json issues = json::array();
    for (auto& p : problems) issues.push_back(p);
    doc["oracle"] = {{"rows", std::move(rows)}, {"agrees", problems.empty()}, {"problems", std::move(issues)}};
  }
  return doc;
}

/// false only when an oracle section is present and reports a mismatch.
inline bool oracle_agrees(const json& doc) { return !doc.contains("oracle") || doc["oracle"]["agrees"].get<bool>(); }

inline std::string render_analysis(const json& doc) {
  std::ostringstream out;
  const auto n = doc["ambient_dim"].get<std::size_t>();
  out << "arrangement: " << doc["name"].get<std::string>() << " (n = " << n
      << ", m = " << doc["subspace_count"].get<std::size_t>() << ")\n";
  out << "dimension function:\n";
  for (const auto& row : doc["dimension_function"])
    out << "  S = " << subset_text(row["subset"]) << "  n_S = " << row["dim"].get<std::size_t>()
        << "  c_S = " << row["codim"].get<std::size_t>() << "\n";
  out << "transversal: " << (doc["transversal"].get<bool>() ? "yes" : "no") << "\n";
  out << "p_S(t):\n";
  for (const auto& row : doc["p_family"])
    out << "  " << subset_text(row["subset"]) << ": " << to_string(poly_from_json(row["p"])) << "\n";
  out << "H(J,t) = (" << to_string(poly_from_json(doc["hilbert_series_J"]["numerator"])) << ") / (1-t)^"
      << doc["hilbert_series_J"]["denominator_power"].get<unsigned>() << "\n";
  out << "Betti numbers of J:";
  for (const auto& b : doc["betti_J"]["total"]) out << ' ' << b.get<std::string>();
  out << "\n  graded:";
  for (const auto& g : doc["betti_J"]["graded"])
    out << " beta_{" << g["i"].get<std::size_t>() << ',' << g["j"].get<std::size_t>() << "} = " << g["value"].get<std::string>()
        << ';';
  out << "\nHilbert polynomial of J: " << to_string(poly_from_json(doc["hilbert_polynomial_J"]), "d") << "\n";
  out << "h_J(d), d = 0.." << doc["max_degree"].get<std::size_t>() << ":";
  for (const auto& v : doc["hilbert_function_J"]) out << ' ' << v.get<std::string>();
  out << "\n";
  if (doc.contains("transversal_data")) {
    const auto& t = doc["transversal_data"];
    out << "f(t) = (" << to_string(poly_from_json(t["f_numerator"])) << ") / (1-t)^" << t["f_denominator_power"].get<unsigned>()
        << "\n";
    out << "H(J,t) - f(t) is a polynomial: " << (t["J_minus_f_is_polynomial"].get<bool>() ? "yes" : "no") << "\n";
    out << "h_I(d) = h_J(d) from the binomial sum:";
    for (const auto& v : t["hilbert_function_I"])
      out << " d=" << v["d"].get<std::size_t>() << ':' << v["value"].get<std::string>();
    out << "\n";
  }
  if (doc.contains("oracle")) {
    const auto& o = doc["oracle"];
    out << "brute force (d: h_I h_J):\n";
    for (const auto& r : o["rows"])
      out << "  " << r["d"].get<std::size_t>() << ": " << r["I"].get<std::size_t>() << ' ' << r["J"].get<std::size_t>() << "\n";
    out << "brute force agrees with closed forms: " << (o["agrees"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& p : o["problems"]) out << "  problem: " << p.get<std::string>() << "\n";
  }
  return out.str();
}

inline json recovery(const RecoveryResult& r, std::size_t m, std::size_t n, json source) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back(to_string(v));
  json doc;
  doc["m"] = m;
  doc["n"] = n;
  doc["first_degree"] = m;
  doc["values"] = std::move(values);
  doc["hilbert_polynomial"] = poly_to_json(r.hilbert_polynomial.coeffs());
  doc["binomial_numerator"] = poly_to_json(r.binomial_numerator);
  doc["multiplicities"] = r.multiplicities;
  doc["codims"] = r.codims;
  doc["dims"] = r.dims(n);
  doc["source"] = std::move(source);
  return doc;
}

inline std::string render_recovery(const json& doc) {
  std::ostringstream out;
  const auto m = doc["m"].get<std::size_t>();
  out << "source: " << doc["source"]["kind"].get<std::string>();
  if (doc["source"].contains("tolerance")) out << " (tolerance " << doc["source"]["tolerance"].get<double>() << ")";
  out << "\nm = " << m << ", n = " << doc["n"].get<std::size_t>() << "\n";
  out << "h_I(d), d = " << m << "..:";
  for (const auto& v : doc["values"]) out << ' ' << v.get<std::string>();
  out << "\nHilbert polynomial: " << to_string(poly_from_json(doc["hilbert_polynomial"]), "d") << "\n";
  out << "numerator a(t): " << to_string(poly_from_json(doc["binomial_numerator"])) << "\n";
  out << "multiplicities r_1..r_{n-1}:";
  for (const auto& v : doc["multiplicities"]) out << ' ' << v.get<std::size_t>();
  out << "\ncodimensions:";
  for (const auto& v : doc["codims"]) out << ' ' << v.get<std::size_t>();
  out << "\ndimensions:";
  for (const auto& v : doc["dims"]) out << ' ' << v.get<std::size_t>();
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Self test over the bundled reference arrangements.

struct SelftestCase {
  std::string name;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

inline std::vector<SelftestCase> selftest() {
  const QPolynomial j_numerator{0, 0, 0, 7, -9, 3};
  const auto column = [](const std::vector<GradedPieceResult>& t, bool intersection) {
    std::vector<std::size_t> out;
    for (const auto& r : t) out.push_back(intersection ? r.dim_I : r.dim_J);
    return out;
  };
  const auto expand = [](const QPolynomial& num, unsigned n, std::size_t order) {
    const QSeries series = expand_rational(num, n, order);
    std::vector<std::size_t> out;
    for (const auto& c : series.coeffs()) out.push_back(c.get_num().get_ui());
    return out;
  };

  std::vector<SelftestCase> cases;
  for (const auto& [name, a] : fixtures::all()) {
    SelftestCase c{name, {}};
    auto check = [&c](bool ok, const std::string& what) {
      if (!ok) c.failures.push_back(what);
    };
    const std::size_t n = a.ambient_dim();
    const std::size_t d_max = n == 3 ? 5 : 6;
    const auto dims = dimension_function(a);
    const auto hs = hilbert_series_J(dims);
    const auto table = hilbert_table(a, d_max);
    check(hs.numerator() == j_numerator, "H(J,t) numerator is 7t^3 - 9t^4 + 3t^5");
    const auto betti = betti_numbers(hs);
    check(betti.betti == std::vector<BigInt>{7, 9, 3}, "Betti numbers of J are 7 9 3");
    check(column(table, false) == expand(hs.numerator(), static_cast<unsigned>(n), d_max), "brute-force h_J matches H(J,t)");
    if (name == "coordinate_axes") {
      check(is_transversal(dims), "transversal");
      check(column(table, true) == std::vector<std::size_t>{0, 0, 3, 7, 12, 18}, "h_I = 0 0 3 7 12 18");
      check(hilbert_polynomial_from_numerator(hs.numerator(), n).coeffs() ==
                QPolynomial(std::vector<Rational>{-2, Rational(3, 2), Rational(1, 2)}),
            "Hilbert polynomial (d^2 + 3d - 4)/2");
    } else if (name == "collinear_points") {
      check(is_transversal(dims), "transversal");
      check(column(table, true) == std::vector<std::size_t>{0, 1, 3, 7, 12, 18}, "h_I = 0 1 3 7 12 18");
    } else if (name == "spanning_planes") {
      check(!is_transversal(dims), "not transversal");
      check(column(table, true) == expand(QPolynomial{0, 0, 3, -2}, 4, d_max), "H(I,t) = (3t^2 - 2t^3)/(1-t)^4");
    } else if (name == "coplanar_planes") {
      check(!is_transversal(dims), "not transversal");
      check(column(table, true) == expand(QPolynomial{0, 1, 0, 1, -1}, 4, d_max), "H(I,t) = (t + t^3 - t^4)/(1-t)^4");
      std::vector<Rational> values;
      for (const auto& r : table) values.emplace_back(static_cast<unsigned long>(r.dim_I));
      const RationalFunction hi{numerator_from_hilbert_function(values, n), static_cast<unsigned>(n)};
      check(!is_series_difference_polynomial(hi, hs.rational_function()), "H(I,t) - H(J,t) is not a polynomial");
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace ahilb::report
