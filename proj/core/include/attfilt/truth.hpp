#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attfilt/so3.hpp"

namespace attfilt {

/// Ground-truth rigid body state at one tick.
struct RigidBodyState {
    Rotation R;
    Vec3 omega = Vec3::Zero();  // body-frame angular velocity, rad/s
    std::int64_t index = 0;
};

/// Rigid body dynamics: J omega_dot = (J omega) x omega + tau(t) with
/// sinusoidal forcing tau_j(t) = amplitude_j * sin(frequency_j * t + phase_j).
struct DynamicsConfig {
    Mat3 inertia = (Eigen::Vector3d(2.56, 3.01, 2.98)).asDiagonal();  // kg m^2
    Vec3 torque_amplitude = Vec3(0.1, 0.2, 0.3);                      // N m
    Vec3 torque_frequency = Vec3(1.0, 1.5707963267948966, 0.62831853071795862);  // rad/s
    Vec3 torque_phase = Vec3::Zero();                                 // rad

    void validate() const;  // inertia symmetric positive definite
};

Vec3 torque_at(const DynamicsConfig& cfg, double t);

/// Trapezoidal attitude update: R_{i+1} = R_i expm((h/2) hat(omega_next + omega_i)).
Rotation step_kinematics(const RigidBodyState& state, const Vec3& omega_next, double h);

/// One classical 4-stage explicit step of Euler's equations; returns
/// omega_{i+1}. t is the time at the start of the step.
Vec3 step_dynamics(const RigidBodyState& state, const DynamicsConfig& cfg, double h, double t);

/// n_steps+1 states starting from (r0, omega0); dynamics and kinematics
/// stepped consistently so the trajectory satisfies the discrete kinematics
/// exactly.
std::vector<RigidBodyState> generate_trajectory(const DynamicsConfig& cfg, const Rotation& r0,
                                                const Vec3& omega0, double h,
                                                std::int64_t n_steps);

/// Columns: i, t, R00..R22 (row major), wx, wy, wz.
void write_trajectory_csv(const std::string& path, const std::vector<RigidBodyState>& states,
                          double h);

}  // namespace attfilt
