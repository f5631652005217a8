#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace lorentz {

enum class CheckStatus {
  Pass,
  Fail,
  HypothesisViolation, // curvature/semidefiniteness hypothesis unmet: skip
  NotCheckable,        // sampled extrema cannot bound the quantified side
  Skipped              // e.g. conjugate point detected before the check ran
};

std::string to_string(CheckStatus s);

// Outcome of one verification: per-sample signed margins (margin >= 0 means
// the inequality holds), the worst margin, tolerance, and the provenance
// needed to reproduce the run.
struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  int samples = 0;
  std::vector<double> margins;
  double worst_margin = std::numeric_limits<double>::infinity();
  double tolerance = 0.0;

  std::uint64_t seed = 0;
  double fd_step = 0.0;
  // The curvature bound actually used (empirical bound + pad on
  // non-space-form models); NaN when the check has no curvature hypothesis.
  double curvature_bound = std::numeric_limits<double>::quiet_NaN();
  std::string notes;

  bool pass() const { return status == CheckStatus::Pass; }
  bool counts_as_skip() const {
    return status == CheckStatus::HypothesisViolation ||
           status == CheckStatus::NotCheckable || status == CheckStatus::Skipped;
  }

  void finalize() {
    worst_margin = std::numeric_limits<double>::infinity();
    for (double m : margins) worst_margin = std::min(worst_margin, m);
    samples = int(margins.size());
    if (status == CheckStatus::Pass || status == CheckStatus::Fail)
      status = worst_margin >= -tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  }
};

using MarginReport = CheckReport;

} // namespace lorentz
