#include "hydfit/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace hydfit {

double nrmse_relative(const std::vector<double>& simulated, const std::vector<double>& targets) {
  if (simulated.size() != targets.size() || targets.empty())
    throw std::invalid_argument("mismatched residual vectors");
  double acc = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double r = (simulated[i] - targets[i]) / targets[i];
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(targets.size()));
}

double rmse(const std::vector<double>& simulated, const std::vector<double>& targets) {
  if (simulated.size() != targets.size() || targets.empty())
    throw std::invalid_argument("mismatched residual vectors");
  double acc = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double r = simulated[i] - targets[i];
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(targets.size()));
}

double expenditure_error(const ModelConfiguration& c, const AthleteParams& a,
                         const ExpenditureTargets& targets, double dt, double t_cap) {
  if (!is_valid(c)) return kPenaltyError;
  std::vector<double> simulated;
  simulated.reserve(targets.tte_targets.size());
  for (double target : targets.tte_targets) {
    const double p = power_for_tte(a, target);
    const double tte = simulate_to_exhaustion(c, p, dt, t_cap);
    if (tte >= t_cap) return kPenaltyError;  // sustainable at this intensity
    simulated.push_back(tte);
  }
  return nrmse_relative(simulated, targets.tte_targets);
}

RecoveryTrialResult simulate_recovery_trial(const ModelConfiguration& c, double p_work,
                                            double p_rec, double t_rec, double dt,
                                            double t_cap) {
  RecoveryTrialResult r;
  if (!is_valid(c) || p_work <= c.m_ae) {
    r.tte_wb1 = t_cap;
    r.non_exhausting = true;
    return r;
  }
  ModelState s;
  r.tte_wb1 = exhaust_from(s, p_work, dt, t_cap, c);
  if (r.tte_wb1 >= t_cap) {
    r.non_exhausting = true;
    return r;
  }
  simulate_constant(s, p_rec, t_rec, dt, c);
  r.tte_wb2 = exhaust_from(s, p_work, dt, t_cap, c);
  r.simulated_ratio = r.tte_wb2 / r.tte_wb1;
  return r;
}

namespace {

// WB1 depends only on the work intensity; reuse its exhaustion state for
// all recovery variations of the same bout.
struct Wb1Outcome {
  double tte = 0.0;
  ModelState state_at_exhaustion;
  bool non_exhausting = false;
};

Wb1Outcome run_wb1(const ModelConfiguration& c, double p_work, double dt, double t_cap) {
  Wb1Outcome out;
  if (p_work <= c.m_ae) {
    out.tte = t_cap;
    out.non_exhausting = true;
    return out;
  }
  ModelState s;
  out.tte = exhaust_from(s, p_work, dt, t_cap, c);
  out.state_at_exhaustion = s;
  out.non_exhausting = out.tte >= t_cap;
  return out;
}

}  // namespace

double recovery_error(const ModelConfiguration& c, const AthleteParams& a,
                      const RecoveryRatioTable& table, double dt, double t_cap) {
  if (!is_valid(c)) return kPenaltyError;
  const ProtocolIntensities pi = protocol_intensities(a);

  Wb1Outcome wb1_cache[2];
  bool wb1_done[2] = {false, false};

  std::vector<double> simulated, targets;
  simulated.reserve(table.entries.size());
  targets.reserve(table.entries.size());
  for (const auto& entry : table.entries) {
    const int w = entry.work == WorkTag::P4 ? 0 : 1;
    const double p_work = entry.work == WorkTag::P4 ? pi.p4 : pi.p8;
    const double p_rec = entry.recovery == RecoveryTag::CP33 ? pi.cp33 : pi.cp66;
    if (!wb1_done[w]) {
      wb1_cache[w] = run_wb1(c, p_work, dt, t_cap);
      wb1_done[w] = true;
    }
    const Wb1Outcome& wb1 = wb1_cache[w];
    if (wb1.non_exhausting) return kPenaltyError;

    ModelState s = wb1.state_at_exhaustion;
    simulate_constant(s, p_rec, entry.duration_s, dt, c);
    const double tte_wb2 = exhaust_from(s, p_work, dt, t_cap, c);
    simulated.push_back(tte_wb2 / wb1.tte);
    targets.push_back(entry.target_ratio);
  }
  return rmse(simulated, targets);
}

FitnessPair evaluate_fitness(const ModelConfiguration& c, const AthleteParams& a,
                             const ExpenditureTargets& targets, const RecoveryRatioTable& table,
                             double dt, double t_cap) {
  if (!is_valid(c)) return {kPenaltyError, kPenaltyError};
  return {expenditure_error(c, a, targets, dt, t_cap),
          recovery_error(c, a, table, dt, t_cap)};
}

}  // namespace hydfit
