#pragma once

#include <cmath>
#include <map>
#include <string>

#include "discwalk/errors.hpp"

namespace discwalk {

/// Physical constants of the 3-link biped: two identical legs joined at the
/// hip and an inertial disc mounted there. The disc's mass is lumped into
/// hip_mass; disc_inertia is its spin inertia about the hip axis.
struct RobotParams {
  double leg_length = 1.0;    ///< L [m]
  double leg_mass = 5.0;      ///< m_l [kg]
  double leg_com = 0.5;       ///< l_c [m], COM distance from the hip along the leg
  double leg_inertia = 5.0 / 12.0;  ///< I_l [kg m^2] about the leg COM
  double hip_mass = 10.0;     ///< m_h [kg], includes disc and carrier
  double disc_inertia = 0.5;  ///< J_d [kg m^2]
  double gravity = 9.81;      ///< g [m/s^2]

  void validate() const {
    auto pos = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(std::string("RobotParams: ") + name + " must be strictly positive");
    };
    pos(leg_length, "leg_length");
    pos(leg_mass, "leg_mass");
    pos(leg_com, "leg_com");
    pos(leg_inertia, "leg_inertia");
    pos(hip_mass, "hip_mass");
    pos(disc_inertia, "disc_inertia");
    pos(gravity, "gravity");
    if (leg_com > leg_length)
      throw ConfigError("RobotParams: leg_com must not exceed leg_length");
  }
};

/// Multiplicative perturbation of selected parameters, keyed by field name.
/// Factors must lie in (0.5, 2.0). Used to de-tune the simulated plant while
/// the controller keeps the nominal model.
using PerturbSpec = std::map<std::string, double>;

inline RobotParams perturb_params(const RobotParams& p, const PerturbSpec& spec) {
  RobotParams out = p;
  for (const auto& [key, factor] : spec) {
    if (!(factor > 0.5 && factor < 2.0))
      throw OutOfBounds("perturb_params: factor for '" + key + "' outside (0.5, 2.0)");
    if (key == "leg_length")
      out.leg_length *= factor;
    else if (key == "leg_mass")
      out.leg_mass *= factor;
    else if (key == "leg_com")
      out.leg_com *= factor;
    else if (key == "leg_inertia")
      out.leg_inertia *= factor;
    else if (key == "hip_mass")
      out.hip_mass *= factor;
    else if (key == "disc_inertia")
      out.disc_inertia *= factor;
    else if (key == "gravity")
      out.gravity *= factor;
    else
      throw OutOfBounds("perturb_params: unknown parameter '" + key + "'");
  }
  out.validate();
  return out;
}

}  // namespace discwalk
