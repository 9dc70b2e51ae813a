#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "discwalk/impact.hpp"
#include "oracles.hpp"

using namespace discwalk;

namespace {
const RobotParams kP{};
constexpr double kDeg = M_PI / 180.0;

// Random state on the impact surface with the swing foot descending.
State random_impact_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> qn(0.08, 0.42);
  std::uniform_real_distribution<double> wn(0.2, 1.6);
  std::uniform_real_distribution<double> slope(-1.8, -0.4);
  std::uniform_real_distribution<double> wd(-3.0, 3.0);
  for (;;) {
    const double q_N = qn(rng);
    const GenPos q{0.0, -2.0 * q_N, q_N};
    const GenVel v{wd(rng), slope(rng) * wn(rng), wn(rng)};
    if (swing_foot_height_rate(kP, q, v) < -1e-3)
      return {q, omega_from_vel(kP, q, v)};
  }
}
}  // namespace

TEST_CASE("swing foot height: coincident legs, oracle value, exchange symmetry") {
  CHECK(swing_foot_height(kP, GenPos{0.3, 0.0, 0.27}) == 0.0);

  const GenPos q{0.0, 30.0 * kDeg, -15.0 * kDeg};
  const double expect =
      kP.leg_length * (std::cos(-15.0 * kDeg) - std::cos(15.0 * kDeg));
  CHECK(swing_foot_height(kP, q) == Catch::Approx(expect).margin(1e-15));
  CHECK(swing_foot_height(kP, q) ==
        Catch::Approx(oracle::swing_foot_pos(kP, q).y()).margin(1e-15));

  // Leg exchange flips which foot is pinned, so the signed height changes
  // sign; the feet separation |p2| is invariant.
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> a(-0.6, 0.6);
  for (int i = 0; i < 100; ++i) {
    const double qN = a(rng), qr = a(rng);
    const GenPos q1{0.0, qr, qN};
    const GenPos q2{0.0, -qr, qN + qr};  // legs exchanged
    CHECK(std::abs(swing_foot_height(kP, q1)) ==
          Catch::Approx(std::abs(swing_foot_height(kP, q2))).margin(1e-14));
  }
}

TEST_CASE("swing foot height rate matches finite differences of p2 along motion") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> a(-0.8, 0.8);
  for (int i = 0; i < 50; ++i) {
    const GenPos q{a(rng), a(rng), a(rng)};
    const GenVel v{a(rng), a(rng), a(rng)};
    const double h = 1e-6;
    const GenPos qp{q.disc + h * v.disc, q.inter_leg + h * v.inter_leg,
                    q.stance + h * v.stance};
    const GenPos qm{q.disc - h * v.disc, q.inter_leg - h * v.inter_leg,
                    q.stance - h * v.stance};
    const double fd = (swing_foot_height(kP, qp) - swing_foot_height(kP, qm)) / (2.0 * h);
    CHECK(swing_foot_height_rate(kP, q, v) == Catch::Approx(fd).margin(1e-9));
  }
}

TEST_CASE("delta_q is the involutive leg relabel") {
  const Mat3 R = delta_q();
  CHECK(((R * R) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const Vec3 relabeled = R * Vec3(0.77, -30.0 * kDeg, 15.0 * kDeg);
  CHECK(relabeled[0] == 0.77);
  CHECK(relabeled[1] == Catch::Approx(30.0 * kDeg).margin(1e-16));
  CHECK(relabeled[2] == Catch::Approx(-15.0 * kDeg).margin(1e-16));

  const Vec3 fixed = R * Vec3(0.5, 0.0, 0.31);
  CHECK((fixed - Vec3(0.5, 0.0, 0.31)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("first column of delta_omega is e1 at random impact configurations") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> qn(0.03, 0.45);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double q_N = qn(rng);
    const Mat3 M = delta_omega(kP, -2.0 * q_N, q_N);
    worst = std::max(worst, (M.col(0) - Vec3::Unit(0)).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("delta_omega is the linear velocity reset: zero maps to zero") {
  const Mat3 M = delta_omega(kP, -0.5, 0.25);
  CHECK((M * Vec3::Zero()).norm() == 0.0);
}

TEST_CASE("impact momentum transfer: sigma+ is the pre-impact momentum about the new foot") {
  std::mt19937 rng(37);
  for (int i = 0; i < 100; ++i) {
    const State x = random_impact_state(rng);
    const GenVel vm = vel_from_omega(kP, x.q, x.w);
    const auto res = apply_impact(kP, x);
    const double expected =
        oracle::angular_momentum_about(kP, x.q, vm, oracle::swing_foot_pos(kP, x.q));
    CHECK(res.post_state.w.sigma_N == Catch::Approx(expected).margin(1e-9));
  }
}

TEST_CASE("kinetic energy does not increase across a plastic impact") {
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    const State x = random_impact_state(rng);
    const GenVel vm = vel_from_omega(kP, x.q, x.w);
    const auto res = apply_impact(kP, x);
    const GenVel vp = vel_from_omega(kP, res.post_state.q, res.post_state.w);
    const double ke_before = kinetic_energy(kP, x.q, vm);
    const double ke_after = kinetic_energy(kP, res.post_state.q, vp);
    CHECK(ke_after <= ke_before * (1.0 + 1e-12));
  }
}

TEST_CASE("impulse is unilateral and the former stance foot lifts off") {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    const State x = random_impact_state(rng);
    const auto res = apply_impact(kP, x);
    CHECK(res.impulse[1] >= 0.0);
    const GenVel vp = vel_from_omega(kP, res.post_state.q, res.post_state.w);
    CHECK(swing_foot_height_rate(kP, res.post_state.q, vp) > 0.0);
    CHECK(res.slip_check >= 0.0);
  }
}

TEST_CASE("apply_impact guards its domain") {
  // not on the surface
  State off{{0.0, -0.3, 0.1}, {}};
  CHECK(swing_foot_height(kP, off.q) > 1e-3);
  CHECK_THROWS_AS(apply_impact(kP, off), NotOnGuard);

  // zero-velocity touchdown maps to the zero-velocity relabeled state
  const double q_N = 0.2;
  State rest{{0.4, -2.0 * q_N, q_N}, {}};
  const auto res = apply_impact(kP, rest);
  CHECK(res.post_state.w.vec().norm() == 0.0);
  CHECK(res.post_state.q.disc == 0.4);
  CHECK(res.post_state.q.inter_leg == Catch::Approx(2.0 * q_N).margin(1e-16));
  CHECK(res.post_state.q.stance == Catch::Approx(-q_N).margin(1e-16));

  // applying the impact twice without flow is rejected: the post state moves
  // away from the surface
  std::mt19937 rng(47);
  const State x = random_impact_state(rng);
  const auto first = apply_impact(kP, x);
  CHECK_THROWS_AS(apply_impact(kP, first.post_state), NotOnGuard);
}
