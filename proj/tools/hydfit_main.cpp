#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "hydfit/archipelago.hpp"
#include "hydfit/bounds.hpp"
#include "hydfit/io.hpp"
#include "hydfit/report.hpp"
#include "hydfit/rng.hpp"

namespace fs = std::filesystem;
using namespace hydfit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRuntimeError = 2;

// Thrown for anything wrong with the inputs (files, flags, manifests).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RecoveryRatioTable resolve_table(const std::string& spec) {
  if (spec == "builtin") return RecoveryRatioTable::builtin();
  try {
    return load_recovery_table_file(spec);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

SearchBounds resolve_bounds(const std::string& spec) {
  if (spec == "builtin") return SearchBounds::builtin();
  try {
    return load_bounds_file(spec);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

AthleteParams resolve_athlete(const std::string& path) {
  try {
    return load_athlete_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

ModelConfiguration resolve_config(const std::string& path) {
  ModelConfiguration c;
  try {
    c = load_config_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto violations = validate_config(c);
  if (!violations.empty()) {
    std::string msg = path + ": invalid configuration:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw InputError(msg);
  }
  return c;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

void write_history_csv(const fs::path& path, const RunResult& run) {
  auto out = open_output(path);
  out << "cycle,best_distance\n";
  for (const auto& rec : run.history)
    out << rec.cycle << ',' << format_full(rec.best_distance) << '\n';
}

void write_fronts_csv(const fs::path& path, const RunResult& run) {
  auto out = open_output(path);
  out << "island,expenditure_error,recovery_error";
  for (const auto& name : config_field_names()) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < run.final_fronts.size(); ++i) {
    for (const auto& ind : run.final_fronts[i]) {
      out << i << ',' << format_full(ind.fitness(0)) << ',' << format_full(ind.fitness(1));
      for (int j = 0; j < ind.genome.size(); ++j) out << ',' << format_full(ind.genome(j));
      out << '\n';
    }
  }
}

void write_run_outputs(const fs::path& dir, const RunResult& run) {
  fs::create_directories(dir);
  write_history_csv(dir / "history.csv", run);
  write_fronts_csv(dir / "pareto_fronts.csv", run);
  write_config_file((dir / "best_config.txt").string(), from_genome(run.best_individual.genome));
}

struct CommonSimOpts {
  double dt = kDefaultDt;
  double t_cap = kDefaultTCap;
};

struct FitOpts {
  std::string athlete_path;
  std::string table_spec = "builtin";
  std::string bounds_spec = "builtin";
  std::string out_dir;
  CommonSimOpts sim;
  ArchipelagoParams arch;
};

// Validates every referenced input before any computation starts.
struct FitManifest {
  AthleteParams athlete;
  RecoveryRatioTable table;
  SearchBounds bounds;
  FitOpts opts;
};

FitManifest build_manifest(const FitOpts& opts) {
  FitManifest m{resolve_athlete(opts.athlete_path), resolve_table(opts.table_spec),
                resolve_bounds(opts.bounds_spec), opts};
  if (opts.sim.dt <= 0.0 || opts.sim.t_cap <= 0.0)
    throw InputError("dt and t-cap must be positive");
  if (opts.out_dir.empty()) throw InputError("--out is required");
  return m;
}

int cmd_simulate(const std::string& config_path, double power, const CommonSimOpts& sim,
                 const std::string& trace_path) {
  const ModelConfiguration c = resolve_config(config_path);
  if (power < 0.0) throw InputError("--power must be non-negative");
  const double tte = simulate_to_exhaustion(c, power, sim.dt, sim.t_cap);
  if (tte >= sim.t_cap)
    std::cout << "sustainable (no exhaustion within t_cap = " << format_compact(sim.t_cap)
              << " s)\n";
  else
    std::cout << "TTE " << format_compact(tte) << " s\n";

  if (!trace_path.empty()) {
    auto out = open_output(trace_path);
    out << "t,h,g,p_ae,p_an\n";
    ModelState s;
    FlowSample flows;
    const long max_steps = static_cast<long>(std::ceil(sim.t_cap / sim.dt - 1e-9));
    for (long k = 1; k <= max_steps; ++k) {
      s = step(s, power, sim.dt, c, &flows);
      out << format_compact(static_cast<double>(k) * sim.dt) << ',' << format_full(s.h) << ','
          << format_full(s.g) << ',' << format_full(flows.p_ae) << ','
          << format_full(flows.p_an) << '\n';
      if (s.h >= 1.0) break;
    }
  }
  return kExitOk;
}

int cmd_fit(const FitOpts& opts) {
  const FitManifest m = build_manifest(opts);
  const BiObjectiveProblem problem = make_fitting_problem(
      m.athlete, ExpenditureTargets::defaults(), m.table, m.bounds, m.opts.sim.dt,
      m.opts.sim.t_cap);
  const RunResult run = run_until_converged(m.opts.arch, problem);
  write_run_outputs(m.opts.out_dir, run);
  std::cout << "best distance " << format_fixed(run.best_distance, 6) << " after "
            << run.cycles_executed << " cycles\n";
  return kExitOk;
}

int cmd_report(const std::string& config_path, const std::string& athlete_path,
               const std::string& table_spec, const CommonSimOpts& sim,
               const std::string& out_dir) {
  const ModelConfiguration c = resolve_config(config_path);
  const AthleteParams athlete = resolve_athlete(athlete_path);
  const RecoveryRatioTable table = resolve_table(table_spec);
  if (out_dir.empty()) throw InputError("--out is required");
  fs::create_directories(out_dir);
  {
    auto out = open_output(fs::path(out_dir) / "expenditure.csv");
    write_expenditure_report(out, c, athlete, ExpenditureTargets::defaults(), sim.dt, sim.t_cap);
  }
  {
    auto out = open_output(fs::path(out_dir) / "recovery.csv");
    write_recovery_report(out, c, athlete, table, sim.dt, sim.t_cap);
  }
  std::cout << "report written to " << out_dir << "\n";
  return kExitOk;
}

std::string cell_dir_name(const GridCell& cell) {
  return "cell_g" + std::to_string(cell.gens) + "_c" + std::to_string(cell.cycles) + "_p" +
         std::to_string(cell.pop) + "_i" + std::to_string(cell.islands);
}

int cmd_grid(const FitOpts& opts, const GridDomain& domain, int repeats) {
  const FitManifest m = build_manifest(opts);
  const BiObjectiveProblem problem = make_fitting_problem(
      m.athlete, ExpenditureTargets::defaults(), m.table, m.bounds, m.opts.sim.dt,
      m.opts.sim.t_cap);

  fs::create_directories(opts.out_dir);
  const fs::path summary_path = fs::path(opts.out_dir) / "grid_summary.csv";
  auto summary = open_output(summary_path);
  summary << "gens,cycles,pop,islands,min,average,max";
  for (const auto& name : config_field_names()) summary << ',' << name;
  summary << '\n';
  summary.flush();

  // Summary rows are flushed as each cell completes; the detail files of a
  // run are written right after that run inside the cell loop below.
  auto on_cell = [&](const GridCellResult& r) {
    summary << r.cell.gens << ',' << r.cell.cycles << ',' << r.cell.pop << ',' << r.cell.islands
            << ',' << format_fixed(r.min, 4) << ',' << format_fixed(r.mean, 4) << ','
            << format_fixed(r.max, 4);
    for (int j = 0; j < r.best.genome.size(); ++j)
      summary << ',' << format_fixed(r.best.genome(j), 2);
    summary << '\n';
    summary.flush();
    std::cerr << "cell gens=" << r.cell.gens << " cycles=" << r.cell.cycles
              << " pop=" << r.cell.pop << " islands=" << r.cell.islands
              << ": min=" << format_fixed(r.min, 4) << " mean=" << format_fixed(r.mean, 4)
              << " max=" << format_fixed(r.max, 4) << "\n";
  };

  // Mirror grid_search's seeding and store per-run details alongside.
  std::vector<GridCellResult> results;
  for (const GridCell& cell : domain.cells()) {
    GridCellResult r;
    r.cell = cell;
    r.min = std::numeric_limits<double>::infinity();
    r.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int rep = 0; rep < repeats; ++rep) {
      ArchipelagoParams params = m.opts.arch;
      params.gens_per_cycle = cell.gens;
      params.max_cycles = cell.cycles;
      params.pop_size = cell.pop;
      params.n_islands = cell.islands;
      std::uint64_t s = m.opts.arch.seed;
      for (std::uint64_t salt : {cell.gens, cell.cycles, cell.pop, cell.islands, rep})
        s = mix_seed(s, salt);
      params.seed = s;

      const RunResult run = run_until_converged(params, problem);
      char rep_name[16];
      std::snprintf(rep_name, sizeof(rep_name), "run%02d", rep);
      write_run_outputs(fs::path(opts.out_dir) / cell_dir_name(cell) / rep_name, run);

      sum += run.best_distance;
      r.max = std::max(r.max, run.best_distance);
      if (run.best_distance < r.min) {
        r.min = run.best_distance;
        r.best = run.best_individual;
      }
    }
    r.mean = sum / static_cast<double>(repeats);
    on_cell(r);
    results.push_back(std::move(r));
  }
  std::cout << "grid summary written to " << summary_path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-component hydraulic performance model: simulation and fitting"};
  app.require_subcommand(1);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "time to exhaustion at a constant demand");
  std::string sim_config, sim_trace;
  double sim_power = 0.0;
  CommonSimOpts sim_opts;
  sim_cmd->add_option("--config", sim_config, "model configuration file")->required();
  sim_cmd->add_option("--power", sim_power, "constant demand in watts")->required();
  sim_cmd->add_option("--dt", sim_opts.dt, "simulation step in seconds");
  sim_cmd->add_option("--t-cap", sim_opts.t_cap, "simulation cap in seconds");
  sim_cmd->add_option("--trace", sim_trace, "write per-step trace CSV to this file");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "fit a configuration to an athlete");
  FitOpts fit_opts;
  fit_cmd->add_option("--athlete", fit_opts.athlete_path, "athlete key-value file")->required();
  fit_cmd->add_option("--recovery-table", fit_opts.table_spec,
                      "recovery ratio CSV or 'builtin'");
  fit_cmd->add_option("--bounds", fit_opts.bounds_spec, "search bounds file or 'builtin'");
  fit_cmd->add_option("--gens", fit_opts.arch.gens_per_cycle, "generations per cycle");
  fit_cmd->add_option("--cycles", fit_opts.arch.max_cycles, "cycle budget");
  fit_cmd->add_option("--pop", fit_opts.arch.pop_size, "population size per island");
  fit_cmd->add_option("--islands", fit_opts.arch.n_islands, "number of islands");
  fit_cmd->add_option("--stagnation", fit_opts.arch.stagnation_cycles,
                      "stop after this many non-improving cycles");
  fit_cmd->add_option("--seed", fit_opts.arch.seed, "master seed");
  fit_cmd->add_option("--dt", fit_opts.sim.dt, "objective simulation step in seconds");
  fit_cmd->add_option("--t-cap", fit_opts.sim.t_cap, "simulation cap in seconds");
  fit_cmd->add_option("--out", fit_opts.out_dir, "output directory")->required();

  // report
  auto* rep_cmd = app.add_subcommand("report", "figure data for a fitted configuration");
  std::string rep_config, rep_athlete, rep_table = "builtin", rep_out;
  CommonSimOpts rep_opts;
  rep_cmd->add_option("--config", rep_config, "fitted configuration file")->required();
  rep_cmd->add_option("--athlete", rep_athlete, "athlete key-value file")->required();
  rep_cmd->add_option("--recovery-table", rep_table, "recovery ratio CSV or 'builtin'");
  rep_cmd->add_option("--dt", rep_opts.dt, "simulation step in seconds");
  rep_cmd->add_option("--t-cap", rep_opts.t_cap, "simulation cap in seconds");
  rep_cmd->add_option("--out", rep_out, "output directory")->required();

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "meta-parameter grid search");
  FitOpts grid_opts;
  GridDomain domain;
  int repeats = 10;
  grid_cmd->add_option("--athlete", grid_opts.athlete_path, "athlete key-value file")
      ->required();
  grid_cmd->add_option("--recovery-table", grid_opts.table_spec,
                       "recovery ratio CSV or 'builtin'");
  grid_cmd->add_option("--bounds", grid_opts.bounds_spec, "search bounds file or 'builtin'");
  grid_cmd->add_option("--gens", domain.gens, "generations-per-cycle values")
      ->delimiter(',');
  grid_cmd->add_option("--cycles", domain.cycles, "cycle budget values")->delimiter(',');
  grid_cmd->add_option("--pop", domain.pops, "population size values")->delimiter(',');
  grid_cmd->add_option("--islands", domain.islands, "island count values")->delimiter(',');
  grid_cmd->add_option("--repeats", repeats, "independent runs per cell");
  grid_cmd->add_option("--stagnation", grid_opts.arch.stagnation_cycles,
                       "stop after this many non-improving cycles");
  grid_cmd->add_option("--seed", grid_opts.arch.seed, "master seed");
  grid_cmd->add_option("--dt", grid_opts.sim.dt, "objective simulation step in seconds");
  grid_cmd->add_option("--t-cap", grid_opts.sim.t_cap, "simulation cap in seconds");
  grid_cmd->add_option("--out", grid_opts.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (sim_cmd->parsed()) return cmd_simulate(sim_config, sim_power, sim_opts, sim_trace);
    if (fit_cmd->parsed()) return cmd_fit(fit_opts);
    if (rep_cmd->parsed()) return cmd_report(rep_config, rep_athlete, rep_table, rep_opts, rep_out);
    if (grid_cmd->parsed()) return cmd_grid(grid_opts, domain, repeats);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitInputError;
}
