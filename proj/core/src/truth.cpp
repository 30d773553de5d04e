#include "attfilt/truth.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "attfilt/csv.hpp"

namespace attfilt {

void DynamicsConfig::validate() const {
    if (!inertia.allFinite() || (inertia - inertia.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("DynamicsConfig: inertia must be symmetric");
    }
    Eigen::LLT<Mat3> llt(inertia);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("DynamicsConfig: inertia must be positive definite");
    }
    if (!torque_amplitude.allFinite() || !torque_frequency.allFinite() ||
        !torque_phase.allFinite()) {
        throw std::invalid_argument("DynamicsConfig: non-finite torque profile");
    }
}

Vec3 torque_at(const DynamicsConfig& cfg, double t) {
    Vec3 tau;
    for (int j = 0; j < 3; ++j) {
        tau(j) = cfg.torque_amplitude(j) * std::sin(cfg.torque_frequency(j) * t + cfg.torque_phase(j));
    }
    return tau;
}

Rotation step_kinematics(const RigidBodyState& state, const Vec3& omega_next, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("step_kinematics: h must be positive");
    }
    return state.R * exp_so3(0.5 * h * (omega_next + state.omega));
}

namespace {

Vec3 omega_dot(const Mat3& inertia, const Mat3& inertia_inv, const Vec3& omega,
               const DynamicsConfig& cfg, double t) {
    return inertia_inv * ((inertia * omega).cross(omega) + torque_at(cfg, t));
}

}  // namespace

Vec3 step_dynamics(const RigidBodyState& state, const DynamicsConfig& cfg, double h, double t) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("step_dynamics: h must be positive");
    }
    const Mat3 inv = cfg.inertia.inverse();
    const Vec3& w = state.omega;
    const Vec3 k1 = omega_dot(cfg.inertia, inv, w, cfg, t);
    const Vec3 k2 = omega_dot(cfg.inertia, inv, w + 0.5 * h * k1, cfg, t + 0.5 * h);
    const Vec3 k3 = omega_dot(cfg.inertia, inv, w + 0.5 * h * k2, cfg, t + 0.5 * h);
    const Vec3 k4 = omega_dot(cfg.inertia, inv, w + h * k3, cfg, t + h);
    return w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<RigidBodyState> generate_trajectory(const DynamicsConfig& cfg, const Rotation& r0,
                                                const Vec3& omega0, double h,
                                                std::int64_t n_steps) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("generate_trajectory: h must be positive");
    }
    if (n_steps < 0) {
        throw std::invalid_argument("generate_trajectory: negative step count");
    }
    cfg.validate();

    std::vector<RigidBodyState> states;
    states.reserve(static_cast<std::size_t>(n_steps) + 1);
    states.push_back({r0, omega0, 0});
    for (std::int64_t i = 0; i < n_steps; ++i) {
        const RigidBodyState& cur = states.back();
        const Vec3 omega_next = step_dynamics(cur, cfg, h, static_cast<double>(i) * h);
        const Rotation r_next = step_kinematics(cur, omega_next, h);
        states.push_back({r_next, omega_next, i + 1});
    }
    return states;
}

void write_trajectory_csv(const std::string& path, const std::vector<RigidBodyState>& states,
                          double h) {
    CsvWriter csv(path);
    csv.row({"i", "t", "R00", "R01", "R02", "R10", "R11", "R12", "R20", "R21", "R22",
             "wx", "wy", "wz"});
    for (const RigidBodyState& s : states) {
        csv.begin_row();
        csv.field(s.index);
        csv.field(static_cast<double>(s.index) * h);
        const Mat3& r = s.R.matrix();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                csv.field(r(i, j));
            }
        }
        for (int i = 0; i < 3; ++i) {
            csv.field(s.omega(i));
        }
        csv.end_row();
    }
}

}  // namespace attfilt
