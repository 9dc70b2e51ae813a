#pragma once

#include <cmath>

#include <Eigen/Core>

#include "discwalk/errors.hpp"
#include "discwalk/params.hpp"
#include "discwalk/state.hpp"

namespace discwalk {

/// Closed-form terms of D(q_r) q̈ + C(q_r, q̇) q̇ + G(q_r, q_N) = B u.
///
/// D and C depend on q_r only; G on (q_r, q_N); nothing depends on q_d.
/// C uses the Christoffel construction, so q̇ᵀ(Ḋ - 2C)q̇ = 0 holds exactly.
struct DynTerms {
  Mat3 D;
  Mat3 C;
  Vec3 G;
  Eigen::Matrix<double, 3, 2> B;
};

namespace detail {

/// Coefficient of -sin(q_N) in G_N: weight of all mass ahead of the stance
/// pivot, g * (m_h L + m_l (L - l_c) + m_l L).
inline double stance_gravity_coeff(const RobotParams& p) {
  return p.gravity * (p.hip_mass * p.leg_length + p.leg_mass * (p.leg_length - p.leg_com) +
                      p.leg_mass * p.leg_length);
}

/// Coefficient of sin(q_N + q_r) in G_N and G_r: g * m_l * l_c.
inline double swing_gravity_coeff(const RobotParams& p) {
  return p.gravity * p.leg_mass * p.leg_com;
}

}  // namespace detail

inline Mat3 inertia_matrix(const RobotParams& p, double q_r) {
  const double L = p.leg_length, ml = p.leg_mass, lc = p.leg_com;
  const double Il = p.leg_inertia, mh = p.hip_mass, Jd = p.disc_inertia;
  const double c = std::cos(q_r);

  Mat3 D;
  const double d_rr = Il + ml * lc * lc;
  const double d_rN = Il - ml * lc * (L * c - lc);
  const double d_NN = 2.0 * Il + Jd + L * L * mh + ml * (L - lc) * (L - lc) +
                      ml * (L * L - 2.0 * L * lc * c + lc * lc);
  D << Jd, 0.0, Jd,
       0.0, d_rr, d_rN,
       Jd, d_rN, d_NN;
  return D;
}

inline Mat3 coriolis_matrix(const RobotParams& p, double q_r, const GenVel& v) {
  const double s = p.leg_length * p.leg_com * p.leg_mass * std::sin(q_r);
  Mat3 C = Mat3::Zero();
  C(1, 2) = -s * v.stance;
  C(2, 1) = s * (v.stance + v.inter_leg);
  C(2, 2) = s * v.inter_leg;
  return C;
}

inline Vec3 gravity_vector(const RobotParams& p, const GenPos& q) {
  const double a = detail::stance_gravity_coeff(p);
  const double b = detail::swing_gravity_coeff(p);
  Vec3 G;
  G[0] = 0.0;
  G[1] = b * std::sin(q.stance + q.inter_leg);
  G[2] = -a * std::sin(q.stance) + b * std::sin(q.stance + q.inter_leg);
  return G;
}

/// (dG_N/dq_r, dG_N/dq_N) at q; used for the analytic derivative of the
/// momentum-profile integrand.
inline Vec2 gravity_N_gradient(const RobotParams& p, const GenPos& q) {
  const double a = detail::stance_gravity_coeff(p);
  const double b = detail::swing_gravity_coeff(p);
  const double cs = b * std::cos(q.stance + q.inter_leg);
  return {cs, -a * std::cos(q.stance) + cs};
}

inline Eigen::Matrix<double, 3, 2> input_map() {
  // u = (u_d, u_r): disc torque reacts on the stance leg via the hip frame,
  // inter-leg torque reacts between the legs; the absolute coordinate row is
  // zero, so sigma_N evolves under gravity alone.
  Eigen::Matrix<double, 3, 2> B;
  B << 1.0, 0.0,
       0.0, 1.0,
       0.0, 0.0;
  return B;
}

inline DynTerms dyn_terms(const RobotParams& p, const GenPos& q, const GenVel& v) {
  return {inertia_matrix(p, q.inter_leg), coriolis_matrix(p, q.inter_leg, v),
          gravity_vector(p, q), input_map()};
}

/// Angular momentum about the stance foot: last row of D times q̇.
inline double momentum(const RobotParams& p, const GenPos& q, const GenVel& v) {
  const Mat3 D = inertia_matrix(p, q.inter_leg);
  return D.row(2).dot(v.vec());
}

inline Omega omega_from_vel(const RobotParams& p, const GenPos& q, const GenVel& v) {
  return {momentum(p, q, v), v.inter_leg, v.stance};
}

/// Inverse of omega_from_vel: recovers q̇_d from sigma_N. The momentum map is
/// invertible whenever D31 (= J_d for this model) is nonzero.
inline GenVel vel_from_omega(const RobotParams& p, const GenPos& q, const Omega& w) {
  const Mat3 D = inertia_matrix(p, q.inter_leg);
  const double d31 = D(2, 0);
  if (std::abs(d31) < 1e-12)
    throw SingularMomentumMap("vel_from_omega: |D31| < 1e-12, disc velocity unrecoverable");
  const double disc = (w.sigma_N - D(2, 1) * w.inter_leg - D(2, 2) * w.stance) / d31;
  return {disc, w.inter_leg, w.stance};
}

inline double potential_energy(const RobotParams& p, const GenPos& q) {
  const double L = p.leg_length, ml = p.leg_mass, lc = p.leg_com, mh = p.hip_mass;
  const double cN = std::cos(q.stance);
  return p.gravity * (mh * L * cN + ml * (L - lc) * cN +
                      ml * (L * cN - lc * std::cos(q.stance + q.inter_leg)));
}

inline double kinetic_energy(const RobotParams& p, const GenPos& q, const GenVel& v) {
  const Vec3 qd = v.vec();
  return 0.5 * qd.dot(inertia_matrix(p, q.inter_leg) * qd);
}

inline double total_energy(const RobotParams& p, const GenPos& q, const GenVel& v) {
  return kinetic_energy(p, q, v) + potential_energy(p, q);
}

/// Forward dynamics q̈ = D⁻¹(B u - C q̇ - G).
inline Vec3 forward_dynamics(const RobotParams& p, const GenPos& q, const GenVel& v,
                             const Vec2& u) {
  const DynTerms d = dyn_terms(p, q, v);
  const Vec3 rhs = d.B * u - d.C * v.vec() - d.G;
  return d.D.ldlt().solve(rhs);
}

}  // namespace discwalk
