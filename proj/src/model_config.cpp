#include "hydfit/model_config.hpp"

namespace hydfit {

std::vector<std::string> validate_config(const ModelConfiguration& c) {
  std::vector<std::string> violations;
  auto require = [&](bool ok, const char* msg) {
    if (!ok) violations.emplace_back(msg);
  };
  require(std::isfinite(c.anf_capacity) && c.anf_capacity > 0.0,
          "anf_capacity must be a positive capacity");
  require(std::isfinite(c.ans_capacity) && c.ans_capacity > 0.0,
          "ans_capacity must be a positive capacity");
  require(std::isfinite(c.m_ae) && c.m_ae > 0.0, "m_ae must be a positive flow");
  require(std::isfinite(c.m_ans) && c.m_ans > 0.0, "m_ans must be a positive flow");
  require(std::isfinite(c.m_anf) && c.m_anf > 0.0, "m_anf must be a positive flow");
  require(std::isfinite(c.phi) && c.phi >= 0.0 && c.phi < 1.0, "phi must lie in [0, 1)");
  require(std::isfinite(c.theta) && c.theta >= 0.0 && c.theta < 1.0,
          "theta must lie in [0, 1)");
  require(std::isfinite(c.gamma) && c.gamma >= 0.0 && c.gamma < 1.0,
          "gamma must lie in [0, 1)");
  require(std::isfinite(c.theta) && std::isfinite(c.gamma) && c.theta + c.gamma < 1.0,
          "theta + gamma < 1 must hold");
  return violations;
}

}  // namespace hydfit
