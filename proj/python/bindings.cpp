// Python bindings for the heckederiv core: integer arithmetic, the series
// kernel, character construction, central-derivative evaluation, verdicts,
// range scans, and the analytic constant checks.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/analytic.hpp"
#include "hecke/kernel.hpp"
#include "hecke/report.hpp"
#include "hecke/scan.hpp"

namespace py = pybind11;

namespace {

py::dict series_dict(const hecke::SeriesResult& s) {
  py::dict out;
  out["value"] = s.value;
  out["trunc_error"] = s.error_bound;
  out["terms"] = s.terms;
  return out;
}

py::dict evaluation_dict(const hecke::EvaluationRecord& ev) {
  py::dict out;
  out["D"] = ev.D;
  out["d"] = ev.d;
  out["family"] = ev.family;
  out["B"] = ev.B;
  out["W"] = ev.root_number;
  out["R"] = series_dict(ev.R);
  out["C"] = series_dict(ev.C);
  out["lambda_prime"] = ev.lambda_prime;
  out["lambda_prime_error"] = ev.lambda_prime_error;
  out["l_prime"] = ev.l_prime;
  out["l_prime_error"] = ev.l_prime_error;
  return out;
}

py::dict verdict_dict(const hecke::VerdictReport& r) {
  py::dict out;
  out["D"] = r.D;
  out["d"] = r.d;
  out["family"] = r.family;
  out["B"] = r.B;
  out["W"] = r.root_number;
  out["h"] = r.h;
  out["r_lower"] = r.r_lower;
  out["c_upper"] = r.c_upper ? py::object(py::float_(*r.c_upper))
                             : py::object(py::none());
  out["method"] =
      r.method == hecke::Method::bound_chain ? "bound_chain" : "direct_table";
  out["evaluation"] = r.evaluation ? py::object(evaluation_dict(*r.evaluation))
                                   : py::object(py::none());
  out["nonvanishing"] = r.nonvanishing;
  out["rank_prediction"] = r.rank_prediction
                               ? py::object(py::int_(*r.rank_prediction))
                               : py::object(py::none());
  out["error"] = r.error;
  return out;
}

py::dict check_dict(const hecke::NamedCheck& c) {
  py::dict out;
  out["name"] = c.name;
  out["computed"] = c.computed;
  out["reference"] = c.reference;
  out["tolerance"] = c.tolerance;
  out["pass"] = c.pass;
  out["note"] = c.note;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Canonical Hecke characters of Q(sqrt(-D)) and certified non-vanishing "
      "of central L-derivatives";

  // Exact arithmetic ---------------------------------------------------------
  m.def("kronecker", &hecke::kronecker, py::arg("a"), py::arg("n"),
        "Kronecker symbol (a | n), fully multiplicative extension of Jacobi");
  m.def("liouville", &hecke::liouville, py::arg("n"),
        "Liouville lambda: (-1)^(number of prime factors with multiplicity)");
  m.def("is_fundamental_discriminant", &hecke::is_fundamental_discriminant,
        py::arg("d"),
        "True iff d is the discriminant of a quadratic field (or d = 1)");
  m.def("class_number", &hecke::class_number, py::arg("D"),
        "h(-D) counted through reduced binary quadratic forms");

  // Kernel and series ---------------------------------------------------------
  m.def(
      "kernel_f",
      [](double x) { return hecke::kernel_f(x).value; }, py::arg("x"),
      "Series kernel f(x) = E1(x)/x, the inverse Mellin transform of "
      "Gamma(s)/(s-1)^2");
  m.def(
      "series_coefficient",
      [](long long D, long long d, long long n, int family_sign) {
        return hecke::series_coefficient(hecke::make_twisted(D, d, family_sign),
                                         n);
      },
      py::arg("D"), py::arg("d") = 1, py::arg("n") = 1,
      py::arg("family_sign") = -1,
      "n-th integer coefficient of the twisted character's expansion");
  m.def(
      "evaluate",
      [](long long D, long long d, double tol, int family_sign) {
        const hecke::TwistedCharacter chi =
            hecke::make_twisted(D, d, family_sign);
        return evaluation_dict(
            hecke::central_derivative(chi, hecke::Tolerance{tol}));
      },
      py::arg("D"), py::arg("d") = 1, py::arg("tol") = 1e-12,
      py::arg("family_sign") = -1,
      "Central derivative via (1/2) Lambda'(1) = R + C with certified "
      "truncation errors; raises ValueError when the root number is +1");

  // Bounds and verdicts --------------------------------------------------------
  m.def("r_lower_bound", &hecke::r_lower_bound, py::arg("B"),
        "Closed lower bound .5235 B - .8458 B^0.75 - .3951 sqrt(B)");
  m.def(
      "c_trivial_bound",
      [](long long D, const std::string& parity) {
        if (parity != "odd" && parity != "even") {
          throw std::invalid_argument("parity must be 'odd' or 'even'");
        }
        return hecke::c_trivial_bound(D, parity == "odd"
                                             ? hecke::FieldParity::odd
                                             : hecke::FieldParity::even);
      },
      py::arg("D"), py::arg("parity"),
      "Trivial bound .0269 D (odd) / .2369 D (even) on |C|");
  m.def(
      "certify",
      [](long long D, long long d, double tol, bool force_direct) {
        hecke::VerdictOptions opts;
        opts.tolerance = tol;
        opts.force_direct = force_direct;
        return verdict_dict(hecke::certify_nonvanishing(D, d, opts));
      },
      py::arg("D"), py::arg("d") = 1, py::arg("tol") = 1e-12,
      py::arg("force_direct") = false,
      "Non-vanishing verdict for (D, d): closed bound chain where it "
      "applies, certified direct evaluation otherwise");
  m.def(
      "scan",
      [](long long d_min, long long d_max, std::vector<long long> twists,
         double tol, int jobs) {
        hecke::ScanConfig cfg;
        cfg.d_min = d_min;
        cfg.d_max = d_max;
        cfg.twists = std::move(twists);
        cfg.tolerance = tol;
        cfg.jobs = jobs;
        py::list rows;
        for (const auto& r : hecke::run_scan(cfg)) rows.append(verdict_dict(r));
        return rows;
      },
      py::arg("d_min"), py::arg("d_max"),
      py::arg("twists") = std::vector<long long>{1}, py::arg("tol") = 1e-12,
      py::arg("jobs") = 1,
      "Verdict rows for every certification target in [d_min, d_max]");

  // Analytic constants -----------------------------------------------------------
  m.def("zeta", &hecke::zeta_complex, py::arg("sigma"), py::arg("t"),
        "zeta(sigma + i t) for sigma > 0, s != 1");
  m.def("gamma_abs", &hecke::gamma_abs, py::arg("sigma"), py::arg("t"),
        "|Gamma(sigma + i t)|");
  m.def("residue_constants", &hecke::residue_constants,
        "(pi/6, 2^{5/4} Gamma(3/4) / (pi^{3/4} zeta(1/2)))");
  m.def(
      "reference_table_checks",
      []() {
        py::list out;
        for (const auto& c : hecke::reference_table_checks()) {
          out.append(check_dict(c));
        }
        return out;
      },
      "The six reference-table cells plus the two elliptic-curve comparisons");
  m.def(
      "analytic_checks",
      []() {
        py::list out;
        for (const auto& c : hecke::analytic_verification_checks()) {
          out.append(check_dict(c));
        }
        return out;
      },
      "Residue, contour-segment, and lattice-constant verification suite");
}
