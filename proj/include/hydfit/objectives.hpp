#pragma once

#include <Eigen/Core>

#include "hydfit/athlete.hpp"
#include "hydfit/hydraulic.hpp"
#include "hydfit/recovery.hpp"

namespace hydfit {

/// Fitness assigned to infeasible or non-exhausting configurations. Far
/// above any achievable error, keeping the search box total for the
/// optimizer without exceptions.
inline constexpr double kPenaltyError = 10.0;

/// Default step size and simulation cap for objective evaluation.
inline constexpr double kDefaultDt = 0.1;
inline constexpr double kDefaultTCap = 5000.0;

/// The two dimensionless errors a configuration is scored by.
struct FitnessPair {
  double expenditure_error = 0.0;
  double recovery_error = 0.0;

  Eigen::Vector2d vec() const { return {expenditure_error, recovery_error}; }
  double distance() const { return vec().norm(); }
};

/// Outcome of one WB1 -> RB -> WB2 trial.
struct RecoveryTrialResult {
  double tte_wb1 = 0.0;
  double tte_wb2 = 0.0;
  double simulated_ratio = 0.0;  ///< tte_wb2 / tte_wb1, not clamped above 1
  bool non_exhausting = false;   ///< WB1 never exhausted within t_cap
};

/// Root mean square of per-target relative residuals (sim - target)/target.
double nrmse_relative(const std::vector<double>& simulated, const std::vector<double>& targets);

/// Plain RMSE over already-dimensionless values.
double rmse(const std::vector<double>& simulated, const std::vector<double>& targets);

/// Expenditure objective: simulate each target intensity to exhaustion and
/// reduce the relative TTE residuals to one NRMSE. Any trial that fails to
/// exhaust within t_cap marks the configuration non-exhausting and returns
/// the penalty.
double expenditure_error(const ModelConfiguration& c, const AthleteParams& a,
                         const ExpenditureTargets& targets, double dt = kDefaultDt,
                         double t_cap = kDefaultTCap);

/// One recovery trial: exhaust at p_work from full tanks, recover at p_rec
/// for exactly t_rec seconds with the state carrying over, then exhaust at
/// p_work again.
RecoveryTrialResult simulate_recovery_trial(const ModelConfiguration& c, double p_work,
                                            double p_rec, double t_rec, double dt = kDefaultDt,
                                            double t_cap = kDefaultTCap);

/// Recovery objective: RMSE between simulated and target recovery ratios
/// over the table's trials. Any flagged trial returns the penalty.
double recovery_error(const ModelConfiguration& c, const AthleteParams& a,
                      const RecoveryRatioTable& table, double dt = kDefaultDt,
                      double t_cap = kDefaultTCap);

/// Both objectives from the same configuration. Deterministic; infeasible
/// configurations map to (penalty, penalty).
FitnessPair evaluate_fitness(const ModelConfiguration& c, const AthleteParams& a,
                             const ExpenditureTargets& targets, const RecoveryRatioTable& table,
                             double dt = kDefaultDt, double t_cap = kDefaultTCap);

}  // namespace hydfit
