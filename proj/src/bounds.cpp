#include "hydfit/bounds.hpp"

#include <stdexcept>

namespace hydfit {

SearchBounds SearchBounds::builtin() {
  SearchBounds b;
  b.lower.resize(8);
  b.upper.resize(8);
  //        anf      ans      m_ae  m_ans  m_anf  phi   theta gamma
  b.lower << 1000.0, 1000.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0;
  b.upper << 500000.0, 1000000.0, 1000.0, 1000.0, 1000.0, 0.99, 0.99, 0.99;
  return b;
}

BiObjectiveProblem make_fitting_problem(const AthleteParams& athlete,
                                        const ExpenditureTargets& targets,
                                        const RecoveryRatioTable& table,
                                        const SearchBounds& bounds, double dt, double t_cap) {
  require_valid(athlete);
  if (bounds.lower.size() != 8 || bounds.upper.size() != 8)
    throw std::invalid_argument("search bounds must cover the 8 configuration parameters");
  for (int j = 0; j < 8; ++j)
    if (!(bounds.lower(j) < bounds.upper(j)))
      throw std::invalid_argument("each lower bound must be below its upper bound");

  BiObjectiveProblem problem;
  problem.lower = bounds.lower;
  problem.upper = bounds.upper;
  problem.evaluate = [athlete, targets, table, dt, t_cap](const Eigen::VectorXd& genome) {
    return evaluate_fitness(from_genome(genome), athlete, targets, table, dt, t_cap).vec();
  };
  return problem;
}

}  // namespace hydfit
