#pragma once

#include <random>

#include "hydfit/bounds.hpp"
#include "hydfit/model_config.hpp"

namespace hydtest {

// Previously fitted parameter sets reused as fixtures across the tests.
inline hydfit::ModelConfiguration fitted_config_a() {
  return {18217.42, 175251.33, 248.05, 85.18, 9.26, 0.78, 0.15, 0.21};
}

inline hydfit::ModelConfiguration fitted_config_b() {
  return {14887.19, 78441.50, 247.88, 91.73, 10.02, 0.64, 0.21, 0.32};
}

inline hydfit::AthleteParams example_athlete() { return {248.0, 18200.0}; }

inline hydfit::ModelConfiguration random_valid_config(std::mt19937_64& rng) {
  const hydfit::SearchBounds b = hydfit::SearchBounds::builtin();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    Eigen::VectorXd g(8);
    for (int j = 0; j < 8; ++j) g(j) = b.lower(j) + u(rng) * (b.upper(j) - b.lower(j));
    const hydfit::ModelConfiguration c = hydfit::from_genome(g);
    if (hydfit::is_valid(c)) return c;
  }
}

}  // namespace hydtest
