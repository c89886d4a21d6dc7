// heckederiv: canonical Hecke characters of imaginary quadratic fields and
// certified non-vanishing of the central derivatives of their L-functions.
//
// Subcommands:
//   verify-paper     reproduce the D = 8 / D = 11 reference table
//   scan             certify a discriminant range, emit a CSV/JSON report
//   evaluate         evaluate one (D, d) pair, print the record as JSON
//   analytic-checks  re-derive the residue/contour/lattice constants
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
// 3 quadrature non-convergence.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecke/quadrature.hpp"
#include "hecke/report.hpp"
#include "hecke/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitQuadrature = 3;

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Render a check suite as an aligned diff table; return how many failed.
int print_checks(const std::vector<hecke::NamedCheck>& checks) {
  std::size_t name_width = 4;
  for (const auto& c : checks) name_width = std::max(name_width, c.name.size());
  int failures = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    std::cout << pad(c.name, name_width) << "  computed "
              << pad(hecke::format_significant(c.computed), 22) << " reference "
              << pad(hecke::format_significant(c.reference), 14) << " "
              << (c.pass ? "pass" : "FAIL");
    if (!c.note.empty()) std::cout << "   (" << c.note << ")";
    std::cout << "\n";
  }
  return failures;
}

int cmd_verify_paper(double perturb) {
  const auto checks = hecke::reference_table_checks(perturb);
  const int failures = print_checks(checks);
  if (failures > 0) {
    std::cout << failures << " of " << checks.size() << " cells mismatched\n";
    return kExitVerificationFailed;
  }
  std::cout << "all " << checks.size() << " cells matched\n";
  return kExitOk;
}

int cmd_scan(const hecke::ScanConfig& cfg, const std::string& format,
             const std::string& out_path) {
  const std::vector<hecke::VerdictReport> rows = hecke::run_scan(cfg);
  const std::string document = (format == "json")
                                   ? hecke::json_document(rows)
                                   : hecke::csv_document(rows);
  if (out_path.empty()) {
    std::cout << document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    out << document;
    if (!out.flush()) {
      std::cerr << "error: short write to " << out_path << "\n";
      return kExitUsage;
    }
  }

  long long vanishing = 0, failed = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) ++failed;
    if (!row.nonvanishing) ++vanishing;
  }
  std::cerr << rows.size() << " rows, " << (rows.size() - vanishing)
            << " certified nonvanishing, " << failed << " row errors\n";
  return vanishing == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_evaluate(long long D, long long d, double tolerance) {
  hecke::VerdictOptions opts;
  opts.tolerance = tolerance;
  opts.force_direct = true;  // a single evaluation always computes the series
  const hecke::VerdictReport row = hecke::certify_nonvanishing(D, d, opts);
  std::cout << hecke::json_record(row);
  return row.nonvanishing && row.error.empty() ? kExitOk
                                               : kExitVerificationFailed;
}

int cmd_analytic_checks(const hecke::AnalyticOptions& opts) {
  const auto checks = hecke::analytic_verification_checks(opts);
  const int failures = print_checks(checks);
  if (failures > 0) {
    std::cout << failures << " of " << checks.size() << " constants failed\n";
    return kExitVerificationFailed;
  }
  std::cout << "all " << checks.size() << " constants verified\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certified non-vanishing of central L-derivatives for canonical Hecke "
      "characters of Q(sqrt(-D))"};
  app.require_subcommand(1);

  // verify-paper ------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify-paper", "Reproduce the D = 8 / D = 11 reference table");
  double perturb = 0.0;
  verify
      ->add_option("--perturb", perturb,
                   "Shift every computed cell by this amount (fault-injection "
                   "hook for testing the gate)")
      ->group("");  // hidden

  // scan ---------------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan", "Certify every valid discriminant in a range");
  hecke::ScanConfig cfg;
  std::string format = "csv";
  std::string out_path;
  std::string twists_arg = "1";
  scan->add_option("--dmin", cfg.d_min, "Smallest discriminant D")->required();
  scan->add_option("--dmax", cfg.d_max, "Largest discriminant D")->required();
  scan->add_option("--twists", twists_arg,
                   "Comma-separated twist discriminants (default 1)");
  scan->add_option("--tol", cfg.tolerance,
                   "Certified truncation tolerance for direct evaluations");
  scan->add_option("--jobs", cfg.jobs, "Worker threads (output is identical "
                   "for any value)");
  scan->add_option("--format", format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", out_path, "Write the report here instead of stdout");
  scan->add_flag("--full", cfg.force_direct,
                 "Evaluate the series even where the closed bound chain "
                 "already certifies (slower; cross-validates the chain)");

  // evaluate ------------------------------------------------------------------
  auto* evaluate = app.add_subcommand(
      "evaluate", "Evaluate one (D, d) pair and print the record as JSON");
  long long eval_D = 0, eval_d = 1;
  double eval_tol = 1e-12;
  evaluate->add_option("--D", eval_D, "Field parameter: K = Q(sqrt(-D))")
      ->required();
  evaluate->add_option("--d", eval_d, "Twist discriminant (1 = untwisted)");
  evaluate->add_option("--tol", eval_tol, "Certified truncation tolerance");

  // analytic-checks -----------------------------------------------------------
  auto* analytic = app.add_subcommand(
      "analytic-checks",
      "Re-derive the residue, contour-segment, and lattice constants");
  hecke::AnalyticOptions aopts;
  analytic
      ->add_option("--max-depth", aopts.max_depth,
                   "Adaptive quadrature bisection depth (fault-injection hook)")
      ->group("");  // hidden
  analytic
      ->add_option("--quad-rel-tol", aopts.quad_rel_tol,
                   "Relative quadrature tolerance (fault-injection hook)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help / the parse diagnostic
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_paper(perturb);
    if (scan->parsed()) {
      cfg.twists.clear();
      for (const std::string& token : CLI::detail::split(twists_arg, ',')) {
        try {
          std::size_t used = 0;
          const long long value = std::stoll(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          cfg.twists.push_back(value);
        } catch (const std::exception&) {
          std::cerr << "error: bad twist value '" << token << "'\n";
          return kExitUsage;
        }
      }
      return cmd_scan(cfg, format, out_path);
    }
    if (evaluate->parsed()) return cmd_evaluate(eval_D, eval_d, eval_tol);
    if (analytic->parsed()) return cmd_analytic_checks(aopts);
  } catch (const hecke::QuadratureError& e) {
    std::cerr << "quadrature non-convergence: " << e.what() << "\n";
    return kExitQuadrature;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
