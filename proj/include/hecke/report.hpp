#pragma once

#include <string>
#include <vector>

#include "hecke/analytic.hpp"
#include "hecke/bounds.hpp"

namespace hecke {

// Shared 15-significant-digit rendering used by both the CSV and JSON
// writers, so the two formats are digit-for-digit comparable.
std::string format_significant(double x);

// Fixed column order of the scan table.
std::string csv_header();
std::string csv_row(const VerdictReport& report);
std::string csv_document(const std::vector<VerdictReport>& rows);
std::string json_document(const std::vector<VerdictReport>& rows);

// Nested single-evaluation record (for one-off evaluations): the verdict
// fields plus full series detail — values, certified truncation errors, and
// term counts for both series.
std::string json_record(const VerdictReport& report);

struct NamedCheck {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// The six derivative-series table cells for D = 8 and D = 11 (R and C at the
// published cutoffs, and the resulting L'(1)), plus the two cross-checks
// against the independently tabulated elliptic-curve derivatives of
// conductors 256 and 121.  `perturb` shifts every computed value; it exists
// so the verification gate can be demonstrated to trip.
std::vector<NamedCheck> reference_table_checks(double perturb = 0.0);

// Residue constants, the five contour-segment bounds (with mirror-symmetry
// cross-checks), the trivial-bound inner constant, and three grid checks:
// Mellin identity residuals, the Gaussian comparison inequality, and the
// assembled contour envelope against the closed-form r_lower_bound.
std::vector<NamedCheck> analytic_verification_checks(
    const AnalyticOptions& opts = {});

}  // namespace hecke
