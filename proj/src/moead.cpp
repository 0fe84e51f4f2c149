#include "hydfit/moead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hydfit {

std::vector<Eigen::Vector2d> generate_weights(int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 weight vectors");
  std::vector<Eigen::Vector2d> weights;
  weights.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(n - 1);
    weights.emplace_back(a, 1.0 - a);
  }
  return weights;
}

DecompositionContext make_decomposition_context(std::vector<Eigen::Vector2d> weights,
                                                int t_neighbors, const Population& evaluated) {
  DecompositionContext ctx;
  ctx.weights = std::move(weights);
  const int n = static_cast<int>(ctx.weights.size());
  const int t = std::min(t_neighbors, n);

  ctx.neighborhoods.resize(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), 0);
    const Eigen::Vector2d& wi = ctx.weights[i];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return (ctx.weights[a] - wi).squaredNorm() < (ctx.weights[b] - wi).squaredNorm();
    });
    ctx.neighborhoods[i].assign(order.begin(), order.begin() + t);
  }

  ctx.ideal_point = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
  for (const auto& ind : evaluated)
    ctx.ideal_point = ctx.ideal_point.cwiseMin(ind.fitness);
  return ctx;
}

Population random_population(const BiObjectiveProblem& problem, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Population pop(n);
  for (auto& ind : pop) {
    ind.genome.resize(problem.dim());
    for (int j = 0; j < problem.dim(); ++j)
      ind.genome(j) = problem.lower(j) + unit(rng) * (problem.upper(j) - problem.lower(j));
    ind.fitness = problem.evaluate(ind.genome);
  }
  return pop;
}

namespace {

// Deb & Goyal polynomial mutation of one gene within [lo, hi].
double mutate_gene(double x, double lo, double hi, double eta, double u) {
  const double span = hi - lo;
  if (span <= 0.0) return x;
  const double d1 = (x - lo) / span;
  const double d2 = (hi - x) / span;
  const double exp = 1.0 / (eta + 1.0);
  double dq;
  if (u < 0.5) {
    const double b = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
    dq = std::pow(b, exp) - 1.0;
  } else {
    const double b = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
    dq = 1.0 - std::pow(b, exp);
  }
  return std::clamp(x + dq * span, lo, hi);
}

// No component worse; replacing b by a cannot lose Pareto quality.
bool weakly_dominates(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a(0) <= b(0) && a(1) <= b(1);
}

// True when `who` is the only carrier of its fitness and no one dominates it.
bool is_unique_nondominated(const Population& pop, std::size_t who) {
  const Eigen::Vector2d& f = pop[who].fitness;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (i == who) continue;
    if (pop[i].fitness == f) return false;
    if (dominates(pop[i].fitness, f)) return false;
  }
  return true;
}

}  // namespace

GenerationStats evolve_generation(Population& pop, DecompositionContext& ctx,
                                  const MoeadParams& params, const BiObjectiveProblem& problem,
                                  std::mt19937_64& rng) {
  const int n = static_cast<int>(pop.size());
  if (n < 5) throw std::invalid_argument("population too small for rand/1 variation");
  if (pop.size() != ctx.weights.size())
    throw std::invalid_argument("population and weights misaligned");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int dim = problem.dim();
  const double mutation_rate = 1.0 / static_cast<double>(dim);

  GenerationStats stats;
  std::vector<int> whole(n);
  std::iota(whole.begin(), whole.end(), 0);
  std::vector<int> scan;

  for (int i = 0; i < n; ++i) {
    const bool use_neighborhood = params.preserve_diversity && unit(rng) <= params.realb;
    const std::vector<int>& pool = use_neighborhood ? ctx.neighborhoods[i] : whole;

    // rand/1: three distinct pool members, none of them the current index.
    int r[3];
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    for (int k = 0; k < 3; ++k) {
      int candidate;
      bool fresh;
      do {
        candidate = pool[pick(rng)];
        fresh = candidate != i;
        for (int m = 0; m < k && fresh; ++m) fresh = candidate != r[m];
      } while (!fresh);
      r[k] = candidate;
    }

    Eigen::VectorXd mutant =
        pop[r[0]].genome + params.f * (pop[r[1]].genome - pop[r[2]].genome);

    // Binomial crossover against the current subproblem's genome.
    Eigen::VectorXd child = pop[i].genome;
    std::uniform_int_distribution<int> pick_gene(0, dim - 1);
    const int j_rand = pick_gene(rng);
    for (int j = 0; j < dim; ++j)
      if (j == j_rand || unit(rng) < params.cr) child(j) = mutant(j);

    for (int j = 0; j < dim; ++j) {
      if (unit(rng) < mutation_rate)
        child(j) = mutate_gene(child(j), problem.lower(j), problem.upper(j), params.eta_m,
                               unit(rng));
      child(j) = std::clamp(child(j), problem.lower(j), problem.upper(j));
    }

    const Eigen::Vector2d child_f = problem.evaluate(child);
    ++stats.offspring;
    ctx.ideal_point = ctx.ideal_point.cwiseMin(child_f);

    // Replace aggregation-worse members of the mating set, in shuffled
    // order, up to `limit` of them when diversity preservation is on.
    scan.assign(pool.begin(), pool.end());
    std::shuffle(scan.begin(), scan.end(), rng);
    int replaced = 0;
    for (int j : scan) {
      if (params.preserve_diversity && replaced >= params.limit) break;
      const double g_child = tchebycheff(child_f, ctx.weights[j], ctx.ideal_point);
      const double g_old = tchebycheff(pop[j].fitness, ctx.weights[j], ctx.ideal_point);
      if (!(g_child < g_old)) continue;
      if (params.preserve_diversity && !weakly_dominates(child_f, pop[j].fitness) &&
          is_unique_nondominated(pop, static_cast<std::size_t>(j)))
        continue;  // would erase the last copy of a non-dominated fitness
      pop[j].genome = child;
      pop[j].fitness = child_f;
      ++replaced;
    }
    stats.replacements += replaced;
    stats.max_replacements_per_offspring =
        std::max(stats.max_replacements_per_offspring, replaced);
  }
  return stats;
}

Population extract_pareto(const Population& pop) {
  Population front;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pop.size() && !dominated; ++j)
      if (j != i && dominates(pop[j].fitness, pop[i].fitness)) dominated = true;
    if (!dominated) front.push_back(pop[i]);
  }
  return front;
}

const Individual& best_tradeoff(const Population& front) {
  if (front.empty()) throw std::invalid_argument("empty front");
  auto better = [](const Individual& a, const Individual& b) {
    const double da = a.fitness.norm(), db = b.fitness.norm();
    if (da != db) return da < db;
    if (a.fitness(0) != b.fitness(0)) return a.fitness(0) < b.fitness(0);
    return std::lexicographical_compare(a.genome.data(), a.genome.data() + a.genome.size(),
                                        b.genome.data(), b.genome.data() + b.genome.size());
  };
  const Individual* best = &front.front();
  for (const auto& ind : front)
    if (better(ind, *best)) best = &ind;
  return *best;
}

}  // namespace hydfit
