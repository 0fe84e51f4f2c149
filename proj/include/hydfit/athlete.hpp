#pragma once

#include <stdexcept>
#include <vector>

namespace hydfit {

/// Critical-power parameters of the reference athlete.
struct AthleteParams {
  double cp = 0.0;       ///< critical power, watts
  double w_prime = 0.0;  ///< anaerobic work capacity W', joules
};

inline void require_valid(const AthleteParams& a) {
  if (!(a.cp > 0.0) || !(a.w_prime > 0.0))
    throw std::invalid_argument("athlete parameters must be strictly positive");
}

/// Intensity that exhausts the athlete after t seconds: CP + W'/t.
inline double power_for_tte(const AthleteParams& a, double t) {
  require_valid(a);
  if (!(t > 0.0)) throw std::invalid_argument("time to exhaustion must be positive");
  return a.cp + a.w_prime / t;
}

/// Inverse relation t = W'/(p - CP). Only defined above critical power.
inline double tte_for_power(const AthleteParams& a, double p) {
  require_valid(a);
  if (!(p > a.cp))
    throw std::invalid_argument("sustainable intensity, no finite time to exhaustion");
  return a.w_prime / (p - a.cp);
}

/// Work and recovery intensities of the WB1 -> RB -> WB2 protocol.
struct ProtocolIntensities {
  double p4 = 0.0;    ///< intensity exhausting after 4 min
  double p8 = 0.0;    ///< intensity exhausting after 8 min
  double cp33 = 0.0;  ///< 33% of CP
  double cp66 = 0.0;  ///< 66% of CP
};

inline ProtocolIntensities protocol_intensities(const AthleteParams& a) {
  require_valid(a);
  return {power_for_tte(a, 240.0), power_for_tte(a, 480.0), 0.33 * a.cp, 0.66 * a.cp};
}

/// Target times to exhaustion defining the expenditure objective.
struct ExpenditureTargets {
  std::vector<double> tte_targets;

  explicit ExpenditureTargets(std::vector<double> targets) : tte_targets(std::move(targets)) {
    double prev = 0.0;
    for (double t : tte_targets) {
      if (!(t > prev))
        throw std::invalid_argument("targets must be strictly positive and increasing");
      prev = t;
    }
    if (tte_targets.empty()) throw std::invalid_argument("targets must not be empty");
  }

  static ExpenditureTargets defaults() {
    return ExpenditureTargets(
        {120.0, 130.0, 140.0, 150.0, 170.0, 190.0, 210.0, 250.0, 310.0, 400.0, 600.0, 1200.0});
  }
};

}  // namespace hydfit
