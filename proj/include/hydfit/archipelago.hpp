#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hydfit/moead.hpp"

namespace hydfit {

struct ArchipelagoParams {
  int n_islands = 7;
  int pop_size = 32;
  int gens_per_cycle = 10;
  int max_cycles = 10;
  int stagnation_cycles = 10;  ///< stop once the best has not improved for more than this
  std::uint64_t seed = 0;      ///< master seed; island seeds are derived from it
  MoeadParams moead;
};

struct CycleRecord {
  int cycle = 0;
  double best_distance = 0.0;  ///< best distance seen up to and including this cycle
};

struct RunResult {
  Individual best_individual;
  double best_distance = 0.0;
  int cycles_executed = 0;
  std::vector<CycleRecord> history;
  std::vector<Population> final_fronts;  ///< Pareto front of each island at the end
};

/// Isolated MOEA/D instances over a fully connected topology. Islands
/// evolve concurrently within a cycle; migration is the synchronization
/// point between cycles.
class Archipelago {
 public:
  struct Island {
    Population pop;
    DecompositionContext ctx;
    std::mt19937_64 rng;
  };

  Archipelago(const ArchipelagoParams& params, const BiObjectiveProblem& problem);

  /// Every island evolves gens_per_cycle generations. No migration.
  void evolve_cycle();

  /// Best-trade-off broadcast: each island sends its best individual to all
  /// others; incoming migrants replace the receiver's worst individuals
  /// (largest distance to the origin), never its own best. No-op with a
  /// single island.
  void migrate();

  /// One cycle: evolve, then migrate.
  void run_cycle();

  /// Best trade-off over all islands' populations right now.
  const Individual& current_best() const;

  /// Full run with stagnation-based stopping.
  RunResult run_until_converged();

  const std::vector<Island>& islands() const { return islands_; }

 private:
  ArchipelagoParams params_;
  BiObjectiveProblem problem_;
  std::vector<Island> islands_;
};

RunResult run_until_converged(const ArchipelagoParams& params,
                              const BiObjectiveProblem& problem);

/// The migration policy on bare populations: island i broadcasts its best
/// trade-off individual; each receiver hosts the incoming migrants in its
/// worst slots (largest distance to the origin, ties to the higher index),
/// with its own best excluded from eviction. Insertion is positional: a
/// migrant is placed even when it is worse than everything it joins.
void migrate_broadcast(std::vector<Population>& pops);

struct GridCell {
  int gens = 0;
  int cycles = 0;
  int pop = 0;
  int islands = 0;
};

struct GridCellResult {
  GridCell cell;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  Individual best;  ///< best individual over the cell's repeats
};

/// The meta-parameter domain searched in the experiments.
struct GridDomain {
  std::vector<int> gens = {10, 20, 30};
  std::vector<int> cycles = {10, 40, 80};
  std::vector<int> pops = {32, 64};
  std::vector<int> islands = {7, 14, 21};

  std::vector<GridCell> cells() const;
};

/// Runs `repeats` independently seeded runs per cell. Run seeds derive from
/// the master seed and the cell coordinates, so results do not depend on
/// which subset of the grid is requested. on_cell (optional) fires after
/// each completed cell, enabling incremental flushing.
std::vector<GridCellResult> grid_search(const GridDomain& domain, int repeats,
                                        const BiObjectiveProblem& problem,
                                        const ArchipelagoParams& base,
                                        const std::function<void(const GridCellResult&)>& on_cell = {});

}  // namespace hydfit
