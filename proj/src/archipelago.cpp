#include "hydfit/archipelago.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>

#include "hydfit/rng.hpp"

namespace hydfit {

Archipelago::Archipelago(const ArchipelagoParams& params, const BiObjectiveProblem& problem)
    : params_(params), problem_(problem) {
  if (params.n_islands < 1) throw std::invalid_argument("need at least one island");
  if (params.pop_size < 5) throw std::invalid_argument("population too small");
  islands_.resize(params.n_islands);
  for (int i = 0; i < params.n_islands; ++i) {
    Island& isl = islands_[i];
    isl.rng = make_engine(mix_seed(params.seed, static_cast<std::uint64_t>(i)));
    isl.pop = random_population(problem_, params.pop_size, isl.rng);
    isl.ctx = make_decomposition_context(generate_weights(params.pop_size),
                                         params.moead.neighbors, isl.pop);
  }
}

void Archipelago::evolve_cycle() {
  auto evolve_island = [this](Island& isl) {
    for (int g = 0; g < params_.gens_per_cycle; ++g)
      evolve_generation(isl.pop, isl.ctx, params_.moead, problem_, isl.rng);
  };
  if (islands_.size() == 1) {
    evolve_island(islands_.front());
    return;
  }
  std::vector<std::future<void>> tasks;
  tasks.reserve(islands_.size());
  for (auto& isl : islands_)
    tasks.push_back(std::async(std::launch::async, evolve_island, std::ref(isl)));
  for (auto& t : tasks) t.get();
}

namespace {

int best_index(const Population& pop) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(pop.size()); ++i) {
    const double di = pop[i].fitness.norm(), db = pop[best].fitness.norm();
    if (di < db ||
        (di == db && (pop[i].fitness(0) < pop[best].fitness(0) ||
                      (pop[i].fitness(0) == pop[best].fitness(0) &&
                       std::lexicographical_compare(
                           pop[i].genome.data(), pop[i].genome.data() + pop[i].genome.size(),
                           pop[best].genome.data(),
                           pop[best].genome.data() + pop[best].genome.size())))))
      best = i;
  }
  return best;
}

}  // namespace

void migrate_broadcast(std::vector<Population>& pops) {
  const int n = static_cast<int>(pops.size());
  if (n < 2) return;

  std::vector<Individual> migrants;
  migrants.reserve(n);
  for (const auto& pop : pops) migrants.push_back(pop[best_index(pop)]);

  for (int j = 0; j < n; ++j) {
    Population& pop = pops[j];
    const int keep = best_index(pop);
    // Worst-first slots, own best excluded. One slot per incoming migrant.
    std::vector<int> slots;
    for (int i = 0; i < static_cast<int>(pop.size()); ++i)
      if (i != keep) slots.push_back(i);
    std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) {
      const double da = pop[a].fitness.norm(), db = pop[b].fitness.norm();
      if (da != db) return da > db;
      return a > b;
    });
    if (static_cast<int>(slots.size()) < n - 1)
      throw std::logic_error("population too small to host migrants");

    int slot = 0;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      pop[slots[slot++]] = migrants[i];
    }
  }
}

void Archipelago::migrate() {
  if (islands_.size() < 2) return;
  std::vector<Population> pops;
  pops.reserve(islands_.size());
  for (auto& isl : islands_) pops.push_back(std::move(isl.pop));
  migrate_broadcast(pops);
  for (std::size_t i = 0; i < islands_.size(); ++i) {
    islands_[i].pop = std::move(pops[i]);
    for (const auto& ind : islands_[i].pop)
      islands_[i].ctx.ideal_point = islands_[i].ctx.ideal_point.cwiseMin(ind.fitness);
  }
}

void Archipelago::run_cycle() {
  evolve_cycle();
  migrate();
}

const Individual& Archipelago::current_best() const {
  const Individual* best = nullptr;
  for (const auto& isl : islands_) {
    const Individual& cand = isl.pop[best_index(isl.pop)];
    if (best == nullptr || cand.fitness.norm() < best->fitness.norm()) best = &cand;
  }
  return *best;
}

RunResult Archipelago::run_until_converged() {
  RunResult result;
  result.best_individual = current_best();
  result.best_distance = result.best_individual.fitness.norm();

  int stagnant = 0;
  for (int cycle = 1; cycle <= params_.max_cycles; ++cycle) {
    run_cycle();
    const Individual& cand = current_best();
    const double d = cand.fitness.norm();
    if (d < result.best_distance) {
      result.best_distance = d;
      result.best_individual = cand;
      stagnant = 0;
    } else {
      ++stagnant;
    }
    result.history.push_back({cycle, result.best_distance});
    result.cycles_executed = cycle;
    if (stagnant > params_.stagnation_cycles) break;
  }

  result.final_fronts.reserve(islands_.size());
  for (const auto& isl : islands_) result.final_fronts.push_back(extract_pareto(isl.pop));
  return result;
}

RunResult run_until_converged(const ArchipelagoParams& params,
                              const BiObjectiveProblem& problem) {
  Archipelago arch(params, problem);
  return arch.run_until_converged();
}

std::vector<GridCell> GridDomain::cells() const {
  std::vector<GridCell> out;
  for (int g : gens)
    for (int c : cycles)
      for (int p : pops)
        for (int i : islands) out.push_back({g, c, p, i});
  return out;
}

std::vector<GridCellResult> grid_search(const GridDomain& domain, int repeats,
                                        const BiObjectiveProblem& problem,
                                        const ArchipelagoParams& base,
                                        const std::function<void(const GridCellResult&)>& on_cell) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  std::vector<GridCellResult> results;
  for (const GridCell& cell : domain.cells()) {
    GridCellResult r;
    r.cell = cell;
    r.min = std::numeric_limits<double>::infinity();
    r.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int rep = 0; rep < repeats; ++rep) {
      ArchipelagoParams params = base;
      params.gens_per_cycle = cell.gens;
      params.max_cycles = cell.cycles;
      params.pop_size = cell.pop;
      params.n_islands = cell.islands;
      std::uint64_t s = base.seed;
      for (std::uint64_t salt : {cell.gens, cell.cycles, cell.pop, cell.islands, rep})
        s = mix_seed(s, salt);
      params.seed = s;

      const RunResult run = run_until_converged(params, problem);
      sum += run.best_distance;
      r.max = std::max(r.max, run.best_distance);
      if (run.best_distance < r.min) {
        r.min = run.best_distance;
        r.best = run.best_individual;
      }
    }
    r.mean = sum / static_cast<double>(repeats);
    if (on_cell) on_cell(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hydfit
