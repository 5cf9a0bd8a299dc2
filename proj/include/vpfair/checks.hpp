#pragma once

// Reported-behavior checks: compare simulated grid means against the metric
// behavior published for the S1-S3 study (ranges read from the text, with a
// fixed absolute tolerance).

#include <cstddef>
#include <string>
#include <vector>

#include "vpfair/experiment.hpp"

namespace vpfair {

struct CriterionCheck {
  std::string id;           ///< e.g. "C1.a"
  std::string description;
  bool passed = false;
  std::string detail;       ///< observed values
};

/// Absolute tolerance on every "approximately" value and range edge at
/// full scale (1000 replicates).
inline constexpr double kReportedTolerance = 0.03;
/// Slack for one noisy adjacent pair in the shape check.
inline constexpr double kShapeSlack = 0.005;
/// Replicate count below which tolerances are doubled.
inline constexpr std::size_t kFullScaleReplicates = 1000;

/// 1 at full scale, 2 for smaller (smoke) runs.
double tolerance_scale_for(std::size_t replicates);

/// Evaluates criteria C1-C5 on binomial (nDD, nDR, nDKL) and multinomial
/// (nDJS) grid results over sets S1-S3. Missing cells make the affected
/// check fail rather than throw.
std::vector<CriterionCheck> check_reported_behavior(const std::vector<CellResult>& binomial,
                                                    const std::vector<CellResult>& multinomial,
                                                    double tolerance_scale = 1.0);

/// One "PASS|FAIL  id  description  [detail]" line per check, preceded by a
/// header that notes the replicate count and any widened tolerance.
std::string format_checks(const std::vector<CriterionCheck>& checks, std::size_t replicates);

bool all_passed(const std::vector<CriterionCheck>& checks);

}  // namespace vpfair
