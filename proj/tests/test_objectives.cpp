#include <doctest.h>

#include "helpers.hpp"
#include "hydfit/objectives.hpp"
#include "oracle_eval.hpp"

using namespace hydfit;
using hydtest::example_athlete;
using hydtest::fitted_config_a;

TEST_SUITE("objectives") {

TEST_CASE("nrmse of zero residuals is zero") {
  CHECK(nrmse_relative({120.0, 600.0}, {120.0, 600.0}) == 0.0);
  CHECK(rmse({0.55, 0.42}, {0.55, 0.42}) == 0.0);
}

TEST_CASE("constant relative error passes through the relative nrmse") {
  const std::vector<double> targets = ExpenditureTargets::defaults().tte_targets;
  std::vector<double> sim;
  for (double t : targets) sim.push_back(t * 1.10);
  CHECK(nrmse_relative(sim, targets) == doctest::Approx(0.10).epsilon(1e-12));
}

TEST_CASE("the relative nrmse is invariant under time rescaling") {
  const std::vector<double> targets = {120.0, 240.0, 480.0};
  const std::vector<double> sim = {100.0, 270.0, 430.0};
  std::vector<double> targets_min, sim_min;
  for (double t : targets) targets_min.push_back(t / 60.0);
  for (double s : sim) sim_min.push_back(s / 60.0);
  CHECK(nrmse_relative(sim, targets) == doctest::Approx(nrmse_relative(sim_min, targets_min)));
}

TEST_CASE("constant offset passes through the plain rmse") {
  const std::vector<double> targets = {0.55, 0.61, 0.42, 0.38};
  std::vector<double> sim;
  for (double r : targets) sim.push_back(r + 0.05);
  CHECK(rmse(sim, targets) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("a configuration sustaining every target intensity is penalized") {
  // m_ae = 500 covers even the 120 s intensity of this athlete (300 W).
  const ModelConfiguration c{20000.0, 50000.0, 500.0, 50.0, 10.0, 0.5, 0.1, 0.1};
  REQUIRE(is_valid(c));
  const AthleteParams a{200.0, 12000.0};
  CHECK(expenditure_error(c, a, ExpenditureTargets::defaults()) == kPenaltyError);
  CHECK(recovery_error(c, a, RecoveryRatioTable::builtin()) == kPenaltyError);
}

TEST_CASE("an infeasible configuration maps to the penalty pair") {
  ModelConfiguration c = fitted_config_a();
  c.theta = 0.6;
  c.gamma = 0.5;
  const FitnessPair f = evaluate_fitness(c, example_athlete(), ExpenditureTargets::defaults(),
                                         RecoveryRatioTable::builtin());
  CHECK(f.expenditure_error == kPenaltyError);
  CHECK(f.recovery_error == kPenaltyError);
}

TEST_CASE("zero recovery time leaves nothing for the second bout") {
  const ModelConfiguration c{20000.0, 30000.0, 50.0, 30.0, 5.0, 0.3, 0.2, 0.2};
  REQUIRE(is_valid(c));
  const RecoveryTrialResult r = simulate_recovery_trial(c, 300.0, 60.0, 0.0);
  CHECK_FALSE(r.non_exhausting);
  CHECK(r.tte_wb1 > 0.0);
  CHECK(r.tte_wb2 == 0.0);
  CHECK(r.simulated_ratio == 0.0);
}

TEST_CASE("long full rest restores nearly the whole first bout") {
  const ModelConfiguration c{5000.0, 5000.0, 100.0, 50.0, 50.0, 0.5, 0.1, 0.1};
  REQUIRE(is_valid(c));
  const double dt = 0.1;
  const RecoveryTrialResult r = simulate_recovery_trial(c, 150.0, 0.0, 20000.0, dt);
  REQUIRE_FALSE(r.non_exhausting);
  CHECK(r.simulated_ratio > 0.95);
  CHECK(r.simulated_ratio <= 1.0 + 2.0 * dt / r.tte_wb1);
}

TEST_CASE("sustainable work intensities flag the trial") {
  const ModelConfiguration c{20000.0, 50000.0, 500.0, 50.0, 10.0, 0.5, 0.1, 0.1};
  const RecoveryTrialResult r = simulate_recovery_trial(c, 300.0, 60.0, 120.0);
  CHECK(r.non_exhausting);
}

TEST_CASE("recovery_error equals twelve standalone trials") {
  const ModelConfiguration c = fitted_config_a();
  const AthleteParams a = example_athlete();
  const RecoveryRatioTable table = RecoveryRatioTable::builtin();
  const ProtocolIntensities pi = protocol_intensities(a);
  std::vector<double> sim, target;
  for (const auto& e : table.entries) {
    const double p_work = e.work == WorkTag::P4 ? pi.p4 : pi.p8;
    const double p_rec = e.recovery == RecoveryTag::CP33 ? pi.cp33 : pi.cp66;
    const RecoveryTrialResult r = simulate_recovery_trial(c, p_work, p_rec, e.duration_s);
    REQUIRE_FALSE(r.non_exhausting);
    sim.push_back(r.simulated_ratio);
    target.push_back(e.target_ratio);
  }
  CHECK(recovery_error(c, a, table) == rmse(sim, target));
}

TEST_CASE("evaluation is deterministic") {
  const FitnessPair f1 = evaluate_fitness(fitted_config_a(), example_athlete(),
                                          ExpenditureTargets::defaults(),
                                          RecoveryRatioTable::builtin());
  const FitnessPair f2 = evaluate_fitness(fitted_config_a(), example_athlete(),
                                          ExpenditureTargets::defaults(),
                                          RecoveryRatioTable::builtin());
  CHECK(f1.expenditure_error == f2.expenditure_error);
  CHECK(f1.recovery_error == f2.recovery_error);
}

TEST_CASE("fixture configurations score in their frozen bands") {
  // Regression anchors for the shipped example athlete. Config A sustains
  // the 1200 s intensity and lands on the penalty; config B exhausts on
  // every trial.
  const FitnessPair fa = evaluate_fitness(fitted_config_a(), example_athlete(),
                                          ExpenditureTargets::defaults(),
                                          RecoveryRatioTable::builtin());
  const FitnessPair fb = evaluate_fitness(hydtest::fitted_config_b(), example_athlete(),
                                          ExpenditureTargets::defaults(),
                                          RecoveryRatioTable::builtin());
  CHECK(fa.expenditure_error == kPenaltyError);
  CHECK(fa.recovery_error > 0.15);
  CHECK(fa.recovery_error < 0.25);
  CHECK(fb.expenditure_error > 0.7);
  CHECK(fb.expenditure_error < 1.0);
  CHECK(fb.recovery_error > 0.10);
  CHECK(fb.recovery_error < 0.20);
}

TEST_CASE("quick agreement with the brute-force oracle") {
  std::mt19937_64 rng(31);
  const AthleteParams a = example_athlete();
  const auto targets = ExpenditureTargets::defaults();
  const auto table = RecoveryRatioTable::builtin();
  std::vector<double> ratios;
  for (const auto& e : table.entries) ratios.push_back(e.target_ratio);
  for (int i = 0; i < 3; ++i) {
    const ModelConfiguration c = hydtest::random_valid_config(rng);
    const FitnessPair f = evaluate_fitness(c, a, targets, table, 0.1);
    const double oe = oracle::expenditure(c, a.cp, a.w_prime, targets.tte_targets, 0.05, 5000.0);
    const double orr = oracle::recovery(c, a.cp, a.w_prime, ratios, 0.05, 5000.0);
    CHECK(std::abs(f.expenditure_error - oe) <= 0.02 * std::max(f.expenditure_error, oe));
    CHECK(std::abs(f.recovery_error - orr) <= 0.02 * std::max(f.recovery_error, orr));
  }
}

}  // TEST_SUITE
