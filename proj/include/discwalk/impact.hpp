#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "discwalk/dynamics.hpp"
#include "discwalk/errors.hpp"
#include "discwalk/params.hpp"
#include "discwalk/state.hpp"

namespace discwalk {

inline constexpr double kGuardTol = 1e-10;  // [m] band around the impact surface

/// Vertical position of the swing foot above ground, p2(q) >= 0 on
/// admissible states, zero exactly at touchdown.
inline double swing_foot_height(const RobotParams& p, const GenPos& q) {
  return p.leg_length * (std::cos(q.stance) - std::cos(q.stance + q.inter_leg));
}

/// Time derivative of p2 along the pinned flow; the guard requires it < 0.
inline double swing_foot_height_rate(const RobotParams& p, const GenPos& q, const GenVel& v) {
  return p.leg_length * (-std::sin(q.stance) * v.stance +
                         std::sin(q.stance + q.inter_leg) * (v.stance + v.inter_leg));
}

/// Constant leg-relabel matrix: (q_d, q_r, q_N) -> (q_d, -q_r, q_N + q_r).
/// Involutive by construction.
inline Mat3 delta_q() {
  Mat3 R;
  R << 1.0, 0.0, 0.0,
       0.0, -1.0, 0.0,
       0.0, 1.0, 1.0;
  return R;
}

namespace detail {

/// Extended-coordinate impulse solve. Coordinates (q_d, q_r, q_N, x_h, y_h);
/// the pre-impact motion is pinned at the old stance foot, the impulse acts
/// at the (touching) swing foot, the old contact releases freely.
/// Returns the post-impact extended velocity and the ground impulse.
struct ImpulseSolution {
  Eigen::Matrix<double, 5, 1> qe_dot_plus;
  Vec2 impulse;
};

inline Eigen::Matrix<double, 5, 5> extended_inertia(const RobotParams& p, const GenPos& q) {
  const double ml = p.leg_mass, lc = p.leg_com, Il = p.leg_inertia;
  const double mh = p.hip_mass, Jd = p.disc_inertia;
  const double ca = std::cos(q.stance + q.inter_leg), sa = std::sin(q.stance + q.inter_leg);
  const double cN = std::cos(q.stance), sN = std::sin(q.stance);
  const double mlc = ml * lc;
  const double jr = Il + ml * lc * lc;
  const double mt = mh + 2.0 * ml;

  Eigen::Matrix<double, 5, 5> De;
  De << Jd, 0.0, Jd, 0.0, 0.0,
        0.0, jr, jr, mlc * ca, mlc * sa,
        Jd, jr, 2.0 * Il + Jd + 2.0 * ml * lc * lc, mlc * (ca + cN), mlc * (sa + sN),
        0.0, mlc * ca, mlc * (ca + cN), mt, 0.0,
        0.0, mlc * sa, mlc * (sa + sN), 0.0, mt;
  return De;
}

inline Eigen::Matrix<double, 2, 5> swing_foot_jacobian(const RobotParams& p, const GenPos& q) {
  const double c = std::cos(q.stance + q.inter_leg), s = std::sin(q.stance + q.inter_leg);
  Eigen::Matrix<double, 2, 5> J;
  J << 0.0, p.leg_length * c, p.leg_length * c, 1.0, 0.0,
       0.0, p.leg_length * s, p.leg_length * s, 0.0, 1.0;
  return J;
}

inline ImpulseSolution solve_impulse(const RobotParams& p, const GenPos& q, const GenVel& v) {
  const auto De = extended_inertia(p, q);
  const auto J = swing_foot_jacobian(p, q);

  Eigen::Matrix<double, 5, 1> qe_dot_minus;
  qe_dot_minus << v.disc, v.inter_leg, v.stance,
      -p.leg_length * v.stance * std::cos(q.stance),
      -p.leg_length * v.stance * std::sin(q.stance);

  Eigen::Matrix<double, 7, 7> kkt = Eigen::Matrix<double, 7, 7>::Zero();
  kkt.topLeftCorner<5, 5>() = De;
  kkt.topRightCorner<5, 2>() = -J.transpose();
  kkt.bottomLeftCorner<2, 5>() = J;

  Eigen::Matrix<double, 7, 1> rhs;
  rhs.head<5>() = De * qe_dot_minus;
  rhs.tail<2>().setZero();

  Eigen::FullPivLU<Eigen::Matrix<double, 7, 7>> lu(kkt);
  if (!lu.isInvertible())
    throw SingularImpact("solve_impulse: contact-constraint block rank deficient");
  const Eigen::Matrix<double, 7, 1> sol = lu.solve(rhs);
  return {sol.head<5>(), sol.tail<2>()};
}

/// Relabel velocities after leg exchange. The new stance leg is the old
/// swing leg; the disc's absolute rate q̇_d + q̇_N is continuous across both
/// the impulse and the relabel.
inline GenVel relabel_velocity(const GenVel& v) {
  return {v.disc - v.inter_leg, -v.inter_leg, v.stance + v.inter_leg};
}

}  // namespace detail

/// Velocity reset in omega coordinates at the impact configuration
/// (q_r^-, q_N^-): omega^+ = delta_omega * omega^-. The first column is
/// (1, 0, 0)^T: the cyclic disc decouples the momentum transfer.
inline Mat3 delta_omega(const RobotParams& p, double q_r_minus, double q_N_minus) {
  const GenPos qm{0.0, q_r_minus, q_N_minus};
  const GenPos qp = GenPos::from(delta_q() * qm.vec());

  Mat3 M;
  for (int i = 0; i < 3; ++i) {
    const GenVel vm = vel_from_omega(p, qm, Omega::from(Vec3::Unit(i)));
    const auto sol = detail::solve_impulse(p, qm, vm);
    const GenVel vp = detail::relabel_velocity(
        {sol.qe_dot_plus[0], sol.qe_dot_plus[1], sol.qe_dot_plus[2]});
    M.col(i) = omega_from_vel(p, qp, vp).vec();
  }
  return M;
}

/// Result of the full impact map.
struct ImpactResult {
  State post_state;
  Vec2 impulse;       ///< ground reaction impulse at the new stance foot [N s]
  double slip_check;  ///< |horizontal| / vertical impulse ratio
};

/// Full impact map x^+ = Delta(x^-): leg relabel plus velocity reset.
/// Requires x^- on the guard: p2 < kGuardTol and ṗ2 < 0.
inline ImpactResult apply_impact(const RobotParams& p, const State& x) {
  const GenVel vm = vel_from_omega(p, x.q, x.w);
  const double p2 = swing_foot_height(p, x.q);
  const double p2dot = swing_foot_height_rate(p, x.q, vm);
  if (!(p2 < kGuardTol))
    throw NotOnGuard("apply_impact: swing foot not at ground level");
  const bool at_rest = vm.vec().norm() < 1e-14;
  if (!at_rest && !(p2dot < 0.0))
    throw NotOnGuard("apply_impact: swing foot not descending");

  const auto sol = detail::solve_impulse(p, x.q, vm);
  const GenVel vp = detail::relabel_velocity(
      {sol.qe_dot_plus[0], sol.qe_dot_plus[1], sol.qe_dot_plus[2]});
  const GenPos qp = GenPos::from(delta_q() * x.q.vec());

  State post{qp, omega_from_vel(p, qp, vp)};
  if (!at_rest && !(swing_foot_height_rate(p, qp, vp) > 0.0))
    throw PenetrationImpact("apply_impact: post-impact swing foot still descending");

  const double fy = sol.impulse[1];
  const double slip = std::abs(sol.impulse[0]) / (std::abs(fy) > 1e-300 ? std::abs(fy) : 1e-300);
  return {post, sol.impulse, slip};
}

}  // namespace discwalk
