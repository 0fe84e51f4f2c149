#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hydfit {

/// A candidate solution: real-valued genome plus its two minimized errors.
struct Individual {
  Eigen::VectorXd genome;
  Eigen::Vector2d fitness;
};

using Population = std::vector<Individual>;

/// A bi-objective minimization problem over a rectangular box.
/// The evaluation function must be safe for concurrent invocation.
struct BiObjectiveProblem {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::function<Eigen::Vector2d(const Eigen::VectorXd&)> evaluate;

  int dim() const { return static_cast<int>(lower.size()); }
};

/// Evenly spaced weight vectors on the 2-simplex, endpoints included:
/// lambda_i = (i/(n-1), 1 - i/(n-1)).
std::vector<Eigen::Vector2d> generate_weights(int n);

/// Tchebycheff aggregation against the ideal point: max_j lambda_j * |f_j - z*_j|.
inline double tchebycheff(const Eigen::Vector2d& f, const Eigen::Vector2d& lambda,
                          const Eigen::Vector2d& z_star) {
  return (lambda.array() * (f - z_star).array().abs()).maxCoeff();
}

/// Weights, their neighborhoods and the maintained ideal point of one
/// decomposition run. A weight's neighborhood holds the indices of its
/// min(T, N) nearest weights (itself included, it is its own nearest);
/// distance ties break towards the lower index.
struct DecompositionContext {
  std::vector<Eigen::Vector2d> weights;
  std::vector<std::vector<int>> neighborhoods;
  Eigen::Vector2d ideal_point;
};

DecompositionContext make_decomposition_context(std::vector<Eigen::Vector2d> weights,
                                                int t_neighbors, const Population& evaluated);

/// Algorithm parameters, defaults as commonly shipped for MOEA/D-DE.
struct MoeadParams {
  double cr = 1.0;                  ///< DE crossover rate
  double f = 0.5;                   ///< DE differential weight
  double eta_m = 20.0;              ///< polynomial mutation distribution index
  double realb = 0.9;               ///< probability of mating within the neighborhood
  int limit = 2;                    ///< max replacements per offspring
  bool preserve_diversity = true;   ///< cap replacements and guard non-dominated uniques
  int neighbors = 20;               ///< neighborhood size T
  std::uint64_t seed = 0;           ///< RNG seed for standalone runs
};

struct GenerationStats {
  int offspring = 0;
  int replacements = 0;
  int max_replacements_per_offspring = 0;
};

/// Uniformly random population inside the problem box, evaluated.
Population random_population(const BiObjectiveProblem& problem, int n, std::mt19937_64& rng);

/// One MOEA/D generation: per subproblem, DE rand/1 variation over the
/// mating pool (neighborhood with probability realb, else the whole
/// population), polynomial mutation at rate 1/dim, bound clamping, one
/// evaluation, ideal-point update and aggregation-based replacement of at
/// most `limit` pool members.
GenerationStats evolve_generation(Population& pop, DecompositionContext& ctx,
                                  const MoeadParams& params, const BiObjectiveProblem& problem,
                                  std::mt19937_64& rng);

/// Maximal set of mutually non-dominated individuals (minimization).
Population extract_pareto(const Population& pop);

/// Front member closest to the origin of objective space. Ties break on
/// the lower first error, then on the lexicographically smaller genome.
const Individual& best_tradeoff(const Population& front);

/// a dominates b: no component worse, at least one strictly better.
inline bool dominates(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a(0) <= b(0) && a(1) <= b(1) && (a(0) < b(0) || a(1) < b(1));
}

}  // namespace hydfit
