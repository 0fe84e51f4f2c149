#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hydfit/model_config.hpp"

namespace hydfit {

/// Fill-depletion state of the two finite tanks. h and g measure depletion
/// from the full mark, so 0 is full; h = 1 means AnF is drained and the
/// demand can no longer be met.
struct ModelState {
  double h = 0.0;  ///< depletion of AnF, in [0, 1]
  double g = 0.0;  ///< depletion of AnS, in [0, g_max]
  double t = 0.0;  ///< elapsed simulation time, seconds
};

/// Flows of one simulation step. p_an > 0 is discharge AnS -> AnF,
/// p_an < 0 is refill AnF -> AnS.
struct FlowSample {
  double p_ae = 0.0;
  double p_an = 0.0;
};

/// Intermediate depletion of AnF once the demand p has been drawn for dt
/// seconds. May exceed 1 transiently; exhaustion is judged after inflows.
inline double apply_demand(double h, double p, double dt, const ModelConfiguration& c) {
  return h + p / c.anf_capacity * dt;
}

/// Aerobic contribution for the intermediate depletion h_p. Grows linearly
/// with depletion until the pipe saturates at h_p >= 1 - phi.
inline double aerobic_flow(double h_p, const ModelConfiguration& c) {
  const double span = 1.0 - c.phi;
  if (h_p <= span) return h_p <= 0.0 ? 0.0 : c.m_ae * h_p / span;
  return c.m_ae;
}

/// Uncapped flow through the AnS<->AnF pipe. Exactly one case applies for
/// any (h_p, g) in the valid domain:
///   - no gradient (equilibrium, AnS full and surface above it, or AnS
///     empty and surface below it) -> 0
///   - AnF surface below the AnS level -> discharge, scaled by m_ans
///   - AnF surface above the AnS level -> refill, scaled by m_anf, negative
inline double anaerobic_flow_raw(double h_p, double g, const ModelConfiguration& c) {
  const double gm = g_max(c);
  const double ans_level = g + c.theta;
  if (h_p == ans_level) return 0.0;
  if (h_p > ans_level) {
    if (g >= gm) return 0.0;  // AnS empty
    if (h_p < 1.0 - c.gamma) return c.m_ans * (h_p - ans_level) / gm;
    // AnF drained past the bottom of AnS: only the remaining pressure counts.
    return c.m_ans * (gm - g) / gm;
  }
  if (g <= 0.0) return 0.0;  // AnS full
  return c.m_anf * (h_p - ans_level) / (1.0 - c.gamma);
}

/// Caps the energy moved through the pipe in one step so that AnS can
/// neither over-drain nor over-fill and the transfer never overshoots the
/// equilibrium between both fill levels.
inline double cap_anaerobic_energy(double e_an, double h_p, double g,
                                   const ModelConfiguration& c) {
  const double gm = g_max(c);
  e_an = std::min(e_an, (gm - g) * c.ans_capacity);
  e_an = std::max(e_an, -g * c.ans_capacity);
  const double equalize =
      (h_p - (g + c.theta)) / (1.0 / c.ans_capacity + 1.0 / c.anf_capacity);
  if (e_an > 0.0) {
    e_an = std::min(e_an, equalize);
  } else if (e_an < 0.0) {
    e_an = std::max(e_an, equalize);
  }
  return e_an;
}

/// Power-form of the cap: limits p_an as simulated over a step of dt seconds.
inline double cap_anaerobic_flow(double p_an, double h_p, double g, double dt,
                                 const ModelConfiguration& c) {
  return cap_anaerobic_energy(p_an * dt, h_p, g, c) / dt;
}

/// Advances the state by one step of dt seconds under demand p.
/// Inflows reduce the depletion of AnF; the final clamp only absorbs
/// floating-point drift, the caps already keep the update in range.
inline ModelState step(ModelState s, double p, double dt, const ModelConfiguration& c,
                       FlowSample* flows = nullptr) {
  const double h_p = apply_demand(s.h, p, dt, c);
  const double p_ae = aerobic_flow(h_p, c);
  const double raw = anaerobic_flow_raw(h_p, s.g, c);
  const double e_an = cap_anaerobic_energy(raw * dt, h_p, s.g, c);
  s.h = std::clamp(h_p - (e_an + p_ae * dt) / c.anf_capacity, 0.0, 1.0);
  s.g = std::clamp(s.g + e_an / c.ans_capacity, 0.0, g_max(c));
  s.t += dt;
  if (flows != nullptr) {
    flows->p_ae = p_ae;
    flows->p_an = e_an / dt;
  }
  return s;
}

/// Continues the simulation at constant demand until AnF is drained.
/// Returns the time from entry to exhaustion at step granularity, or t_cap
/// when the state never exhausts within the cap. The state is advanced to
/// the moment the returned time refers to.
inline double exhaust_from(ModelState& s, double p, double dt, double t_cap,
                           const ModelConfiguration& c) {
  if (s.h >= 1.0) return 0.0;
  const long max_steps = static_cast<long>(std::ceil(t_cap / dt - 1e-9));
  for (long k = 1; k <= max_steps; ++k) {
    s = step(s, p, dt, c);
    if (s.h >= 1.0) return static_cast<double>(k) * dt;
  }
  return t_cap;
}

/// Runs the state forward for a fixed duration regardless of fill levels.
inline void simulate_constant(ModelState& s, double p, double duration, double dt,
                              const ModelConfiguration& c) {
  const long steps = std::lround(duration / dt);
  for (long k = 0; k < steps; ++k) s = step(s, p, dt, c);
}

/// Time to exhaustion from full tanks at constant demand p.
/// Demands at or below m_ae are sustainable indefinitely (the aerobic pipe
/// alone eventually covers them, and the equalizing cap keeps AnS refill
/// from draining AnF to the limit), so they report t_cap directly.
inline double simulate_to_exhaustion(const ModelConfiguration& c, double p, double dt,
                                     double t_cap) {
  if (!is_valid(c)) {
    std::string msg = "invalid model configuration:";
    for (const auto& v : validate_config(c)) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  if (p < 0.0) throw std::invalid_argument("demand must be non-negative");
  if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (p <= c.m_ae) return t_cap;
  ModelState s;
  return exhaust_from(s, p, dt, t_cap, c);
}

}  // namespace hydfit
