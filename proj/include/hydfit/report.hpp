#pragma once

#include <iosfwd>

#include "hydfit/objectives.hpp"

namespace hydfit {

/// Published group means and standard deviations (percent) for the
/// recovery ratios at 2/4/6 min, per preceding work intensity.
struct PublishedRecoveryReference {
  double mean_percent = 0.0;
  double std_percent = 0.0;
};

PublishedRecoveryReference published_recovery_reference(WorkTag work, double duration_s);

/// Expenditure curve data: the 12 targets plus a dense power sweep, each
/// row carrying the critical-power TTE and the simulated TTE.
/// Columns: kind,power_watts,target_tte_s,simulated_tte_s
void write_expenditure_report(std::ostream& out, const ModelConfiguration& c,
                              const AthleteParams& a, const ExpenditureTargets& targets,
                              double dt, double t_cap, int sweep_points = 60);

/// Recovery data: simulated ratios next to the table targets and the
/// published reference means/stds.
/// Columns: work,recovery,duration_s,target_ratio_percent,
///          simulated_ratio_percent,ref_mean_percent,ref_std_percent
void write_recovery_report(std::ostream& out, const ModelConfiguration& c,
                           const AthleteParams& a, const RecoveryRatioTable& table, double dt,
                           double t_cap);

}  // namespace hydfit
