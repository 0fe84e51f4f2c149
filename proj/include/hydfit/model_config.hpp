#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string>
#include <vector>

namespace hydfit {

/// Configuration of the generalized three-component hydraulic model.
///
/// Two finite tanks (AnF fast, AnS slow) and an infinite aerobic source Ae
/// are connected on a unit height. Capacities are energy units (joules),
/// flow limits are power units (watts), and phi/theta/gamma are geometric
/// placement fractions of the unit height.
struct ModelConfiguration {
  double anf_capacity = 0.0;  ///< liquid capacity of tank AnF, > 0
  double ans_capacity = 0.0;  ///< liquid capacity of tank AnS, > 0
  double m_ae = 0.0;          ///< maximal aerobic flow, > 0
  double m_ans = 0.0;         ///< maximal flow AnS -> AnF, > 0
  double m_anf = 0.0;         ///< maximal reverse flow AnF -> AnS, > 0
  double phi = 0.0;           ///< aerobic pipe height above the bottom, in [0, 1)
  double theta = 0.0;         ///< distance from the top to the top of AnS, in [0, 1)
  double gamma = 0.0;         ///< distance from the bottom to the bottom of AnS, in [0, 1)
};

/// Total height of tank AnS on the unit scale.
inline double g_max(const ModelConfiguration& c) { return 1.0 - c.theta - c.gamma; }

/// Fast feasibility check used on the optimizer's hot path.
inline bool is_valid(const ModelConfiguration& c) {
  const bool finite = std::isfinite(c.anf_capacity) && std::isfinite(c.ans_capacity) &&
                      std::isfinite(c.m_ae) && std::isfinite(c.m_ans) && std::isfinite(c.m_anf) &&
                      std::isfinite(c.phi) && std::isfinite(c.theta) && std::isfinite(c.gamma);
  return finite && c.anf_capacity > 0.0 && c.ans_capacity > 0.0 && c.m_ae > 0.0 &&
         c.m_ans > 0.0 && c.m_anf > 0.0 && c.phi >= 0.0 && c.phi < 1.0 && c.theta >= 0.0 &&
         c.theta < 1.0 && c.gamma >= 0.0 && c.gamma < 1.0 && c.theta + c.gamma < 1.0;
}

/// Returns every violated invariant as a human-readable message.
/// An empty list means the configuration is feasible.
std::vector<std::string> validate_config(const ModelConfiguration& c);

/// 8-element array form in configuration order
/// (anf, ans, m_ae, m_ans, m_anf, phi, theta, gamma), for the optimizer.
inline Eigen::VectorXd to_genome(const ModelConfiguration& c) {
  Eigen::VectorXd v(8);
  v << c.anf_capacity, c.ans_capacity, c.m_ae, c.m_ans, c.m_anf, c.phi, c.theta, c.gamma;
  return v;
}

inline ModelConfiguration from_genome(const Eigen::VectorXd& v) {
  ModelConfiguration c;
  c.anf_capacity = v(0);
  c.ans_capacity = v(1);
  c.m_ae = v(2);
  c.m_ans = v(3);
  c.m_anf = v(4);
  c.phi = v(5);
  c.theta = v(6);
  c.gamma = v(7);
  return c;
}

/// Field names in configuration order, shared by file I/O and CSV headers.
inline const std::vector<std::string>& config_field_names() {
  static const std::vector<std::string> names = {"anf_capacity", "ans_capacity", "m_ae", "m_ans",
                                                 "m_anf",        "phi",          "theta", "gamma"};
  return names;
}

}  // namespace hydfit
