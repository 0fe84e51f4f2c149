#pragma once

#include <Eigen/Core>

#include "hydfit/moead.hpp"
#include "hydfit/objectives.hpp"

namespace hydfit {

/// Rectangular search box over the 8 configuration parameters, in
/// configuration order. theta + gamma < 1 is not enforced by the box;
/// infeasible corners are penalized by the objectives.
struct SearchBounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static SearchBounds builtin();
};

/// Wraps athlete, targets and recovery table into the bi-objective fitting
/// problem the optimizer sees. Pure and safe for concurrent evaluation.
BiObjectiveProblem make_fitting_problem(const AthleteParams& athlete,
                                        const ExpenditureTargets& targets,
                                        const RecoveryRatioTable& table,
                                        const SearchBounds& bounds, double dt = kDefaultDt,
                                        double t_cap = kDefaultTCap);

}  // namespace hydfit
