// Command-line front end.
//
//   ahilb analyze <file> [--max-degree D] [--oracle] [--json] [--jobs k]
//   ahilb recover (--values v... --m M --n N | --points FILE --m M [--tol e]) [--json]
//   ahilb selftest
//
// Exit codes: 0 success, 1 bad input or usage, 2 values inconsistent with a
// transversal arrangement, 3 closed form disagrees with brute force.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ahilb/gpca.hpp"
#include "ahilb/io.hpp"
#include "ahilb/report.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitDisagreement = 3;

void print(const nlohmann::json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series, Betti numbers and GPCA dimension recovery for subspace arrangements"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::size_t> max_degree;
  bool oracle = false;
  bool as_json = false;
  std::size_t jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "Closed-form invariants of an arrangement file");
  analyze->add_option("file", file, "Arrangement JSON file")->required();
  analyze->add_option("--max-degree", max_degree, "Highest degree tabulated (default m + n - 1)");
  analyze->add_flag("--oracle", oracle, "Also compute h_I and h_J by brute force and compare");
  analyze->add_flag("--json", as_json, "Emit JSON");
  analyze->add_option("--jobs", jobs, "Worker threads for the brute-force table")->check(CLI::PositiveNumber);

  std::vector<std::string> values;
  std::optional<std::size_t> m_opt;
  std::optional<std::size_t> n_opt;
  std::string points_file;
  std::optional<double> tol;
  auto* recover = app.add_subcommand("recover", "Recover subspace codimensions of a transversal arrangement");
  auto* values_opt = recover->add_option("--values", values, "h_I(d) for d = m, ..., m + n - 1");
  auto* points_opt = recover->add_option("--points", points_file, "Point-cloud JSON file");
  recover->add_option("--m", m_opt, "Number of subspaces")->required();
  auto* n_option = recover->add_option("--n", n_opt, "Ambient dimension (with --values)");
  auto* tol_opt = recover->add_option("--tol", tol, "Relative rank tolerance; enables float point clouds");
  recover->add_flag("--json", as_json, "Emit JSON");
  values_opt->excludes(points_opt);
  values_opt->needs(n_option);
  tol_opt->needs(points_opt);

  auto* selftest = app.add_subcommand("selftest", "Run the bundled reference arrangements end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    const ahilb::Limits limits = ahilb::Limits::from_env();
    if (*analyze) {
      const auto named = ahilb::io::load_arrangement(file, limits);
      ahilb::report::AnalyzeOptions opts{max_degree, oracle, jobs, limits};
      const auto doc = ahilb::report::analyze(named.name, named.arrangement, opts);
      print(doc, as_json, as_json ? "" : ahilb::report::render_analysis(doc));
      if (!ahilb::report::oracle_agrees(doc)) {
        std::cerr << "error: brute-force table disagrees with the closed forms; this is a bug\n";
        return kExitDisagreement;
      }
      return 0;
    }
    if (*recover) {
      if (values_opt->count() == 0 && points_opt->count() == 0) {
        std::cerr << "error: recover needs either --values or --points\n";
        return kExitInput;
      }
      const std::size_t m = *m_opt;
      ahilb::RecoveryResult result;
      nlohmann::json source;
      std::size_t n = 0;
      if (values_opt->count() > 0) {
        n = *n_opt;
        std::vector<ahilb::BigInt> parsed;
        for (const auto& v : values) {
          const auto q = ahilb::parse_rational(v);
          if (!ahilb::is_integer(q) || q < 0) throw ahilb::ValidationError("--values entries must be non-negative integers");
          parsed.emplace_back(q.get_num());
        }
        result = ahilb::recover_codimensions(parsed, m, n);
        source = {{"kind", "values"}};
      } else {
        const auto cloud = ahilb::io::load_point_cloud(points_file, tol.has_value());
        n = cloud.ambient_dim();
        const auto mode = tol ? ahilb::EstimationMode::approx(*tol) : ahilb::EstimationMode::exact_mode();
        result = ahilb::end_to_end_recover(cloud, m, mode, limits);
        source = {{"kind", tol ? "points-approx" : "points-exact"}, {"point_count", cloud.size()}};
        if (tol) source["tolerance"] = *tol;
      }
      const auto doc = ahilb::report::recovery(result, m, n, source);
      print(doc, as_json, as_json ? "" : ahilb::report::render_recovery(doc));
      return 0;
    }
    if (*selftest) {
      bool ok = true;
      for (const auto& c : ahilb::report::selftest()) {
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << "\n";
        for (const auto& f : c.failures) std::cout << "  expected: " << f << "\n";
        ok = ok && c.passed();
      }
      return ok ? 0 : kExitDisagreement;
    }
  } catch (const ahilb::InconsistentValuesError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: check that --m is the number of subspaces, that the arrangement is transversal, and that the "
                 "values are exact h_I(d) for d = m..m+n-1\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
