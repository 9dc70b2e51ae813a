#pragma once

#include <Eigen/Core>

namespace discwalk {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Generalized positions, ordered (q_d, q_r, q_N).
///
/// q_N is the absolute stance-leg angle from the upward vertical, CCW
/// positive; q_r is the swing-leg angle minus the stance-leg angle; q_d is
/// the disc angle relative to a frame fixed to the stance leg (cyclic).
struct GenPos {
  double disc = 0.0;       ///< q_d [rad]
  double inter_leg = 0.0;  ///< q_r [rad]
  double stance = 0.0;     ///< q_N [rad]

  Vec3 vec() const { return {disc, inter_leg, stance}; }
  static GenPos from(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Generalized velocities (q̇_d, q̇_r, q̇_N).
struct GenVel {
  double disc = 0.0;
  double inter_leg = 0.0;
  double stance = 0.0;

  Vec3 vec() const { return {disc, inter_leg, stance}; }
  static GenVel from(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Velocity-like coordinates (sigma_N, q̇_r, q̇_N); sigma_N is the angular
/// momentum of the whole robot about the stance foot.
struct Omega {
  double sigma_N = 0.0;    ///< [kg m^2/s]
  double inter_leg = 0.0;  ///< q̇_r [rad/s]
  double stance = 0.0;     ///< q̇_N [rad/s]

  Vec3 vec() const { return {sigma_N, inter_leg, stance}; }
  static Omega from(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Full state x = (q, omega).
struct State {
  GenPos q;
  Omega w;
};

}  // namespace discwalk
