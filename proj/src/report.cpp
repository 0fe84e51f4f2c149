#include "hydfit/report.hpp"

#include <ostream>
#include <stdexcept>

#include "hydfit/io.hpp"

namespace hydfit {

PublishedRecoveryReference published_recovery_reference(WorkTag work, double duration_s) {
  if (work == WorkTag::P4) {
    if (duration_s == 120.0) return {51.8, 2.8};
    if (duration_s == 240.0) return {57.7, 4.3};
    if (duration_s == 360.0) return {64.0, 5.8};
  } else {
    if (duration_s == 120.0) return {40.1, 3.9};
    if (duration_s == 240.0) return {44.8, 3.0};
    if (duration_s == 360.0) return {54.8, 3.8};
  }
  return {0.0, 0.0};  // no published reference for this duration
}

void write_expenditure_report(std::ostream& out, const ModelConfiguration& c,
                              const AthleteParams& a, const ExpenditureTargets& targets,
                              double dt, double t_cap, int sweep_points) {
  if (!is_valid(c)) throw std::invalid_argument("invalid model configuration");
  out << "kind,power_watts,target_tte_s,simulated_tte_s\n";
  for (double t : targets.tte_targets) {
    const double p = power_for_tte(a, t);
    const double sim = simulate_to_exhaustion(c, p, dt, t_cap);
    out << "target," << format_compact(p) << ',' << format_compact(t) << ','
        << format_compact(sim) << '\n';
  }
  const double t_short = targets.tte_targets.front() * 0.9;
  const double t_long = targets.tte_targets.back() * 1.1;
  const double p_hi = power_for_tte(a, t_short);
  const double p_lo = power_for_tte(a, t_long);
  for (int i = 0; i < sweep_points; ++i) {
    const double p =
        p_lo + (p_hi - p_lo) * static_cast<double>(i) / static_cast<double>(sweep_points - 1);
    const double cp_tte = tte_for_power(a, p);
    const double sim = simulate_to_exhaustion(c, p, dt, t_cap);
    out << "sweep," << format_compact(p) << ',' << format_compact(cp_tte) << ','
        << format_compact(sim) << '\n';
  }
}

void write_recovery_report(std::ostream& out, const ModelConfiguration& c,
                           const AthleteParams& a, const RecoveryRatioTable& table, double dt,
                           double t_cap) {
  if (!is_valid(c)) throw std::invalid_argument("invalid model configuration");
  const ProtocolIntensities pi = protocol_intensities(a);
  out << "work,recovery,duration_s,target_ratio_percent,simulated_ratio_percent,"
         "ref_mean_percent,ref_std_percent\n";
  for (const auto& e : table.entries) {
    const double p_work = e.work == WorkTag::P4 ? pi.p4 : pi.p8;
    const double p_rec = e.recovery == RecoveryTag::CP33 ? pi.cp33 : pi.cp66;
    const RecoveryTrialResult trial =
        simulate_recovery_trial(c, p_work, p_rec, e.duration_s, dt, t_cap);
    const PublishedRecoveryReference ref = published_recovery_reference(e.work, e.duration_s);
    out << to_string(e.work) << ',' << to_string(e.recovery) << ','
        << format_compact(e.duration_s) << ',' << format_compact(e.target_ratio * 100.0) << ','
        << format_compact(trial.simulated_ratio * 100.0) << ',' << format_compact(ref.mean_percent)
        << ',' << format_compact(ref.std_percent) << '\n';
  }
}

}  // namespace hydfit
