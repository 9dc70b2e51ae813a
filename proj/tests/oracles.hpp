#pragma once

// Test-side oracles, independent of the closed-form model code under test.
// Kinematic quantities are rebuilt body by body from position vectors, not
// from the Lagrangian matrices.

#include <array>
#include <cmath>
#include <functional>

#include <Eigen/Core>

#include "discwalk/params.hpp"
#include "discwalk/state.hpp"

namespace oracle {

using discwalk::GenPos;
using discwalk::GenVel;
using discwalk::RobotParams;
using discwalk::Vec2;

struct Body {
  double mass;
  Vec2 pos;
  Vec2 vel;
  double inertia;
  double rate;
};

inline std::array<Body, 3> bodies(const RobotParams& p, const GenPos& q, const GenVel& v) {
  const auto u = [](double a) { return Vec2{-std::sin(a), std::cos(a)}; };
  const auto w = [](double a) { return Vec2{-std::cos(a), -std::sin(a)}; };
  const double qN = q.stance, qs = q.stance + q.inter_leg;
  const double wN = v.stance, ws = v.stance + v.inter_leg;
  const double L = p.leg_length, lc = p.leg_com;

  Body stance{p.leg_mass, (L - lc) * u(qN), (L - lc) * wN * w(qN), p.leg_inertia, wN};
  Body swing{p.leg_mass, L * u(qN) - lc * u(qs), L * wN * w(qN) - lc * ws * w(qs),
             p.leg_inertia, ws};
  Body hip{p.hip_mass, L * u(qN), L * wN * w(qN), p.disc_inertia, v.stance + v.disc};
  return {stance, swing, hip};
}

/// Angular momentum of the whole robot about a ground point r0 (z-component).
inline double angular_momentum_about(const RobotParams& p, const GenPos& q, const GenVel& v,
                                     const Vec2& r0) {
  double h = 0.0;
  for (const auto& b : bodies(p, q, v)) {
    const Vec2 r = b.pos - r0;
    h += b.mass * (r.x() * b.vel.y() - r.y() * b.vel.x()) + b.inertia * b.rate;
  }
  return h;
}

inline double kinetic_energy(const RobotParams& p, const GenPos& q, const GenVel& v) {
  double T = 0.0;
  for (const auto& b : bodies(p, q, v))
    T += 0.5 * b.mass * b.vel.squaredNorm() + 0.5 * b.inertia * b.rate * b.rate;
  return T;
}

inline Vec2 swing_foot_pos(const RobotParams& p, const GenPos& q) {
  const auto u = [](double a) { return Vec2{-std::sin(a), std::cos(a)}; };
  return p.leg_length * (u(q.stance) - u(q.stance + q.inter_leg));
}

/// Classic fixed-step RK4, independent of the adaptive integrator under test.
template <class Vec, class F>
Vec rk4(F&& f, double t0, Vec y, double dt, int steps) {
  double t = t0;
  for (int i = 0; i < steps; ++i) {
    const Vec k1 = f(t, y);
    const Vec k2 = f(t + 0.5 * dt, Vec(y + 0.5 * dt * k1));
    const Vec k3 = f(t + 0.5 * dt, Vec(y + 0.5 * dt * k2));
    const Vec k4 = f(t + dt, Vec(y + dt * k3));
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
  }
  return y;
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
