#pragma once

#include <Eigen/Dense>

namespace attfilt {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Element of so(3). Always produced by hat(); never validated on use.
using SkewMatrix = Mat3;

/// Proper rotation matrix (orthogonal, det +1). The only attitude
/// representation used in this library.
class Rotation {
public:
    Rotation() : m_(Mat3::Identity()) {}

    /// Validates orthogonality and det(R) = +1 to 1e-12; throws
    /// std::invalid_argument otherwise.
    static Rotation from_matrix(const Mat3& m);

    /// No validation. For internal paths whose output is orthogonal by
    /// construction (Rodrigues, products of rotations).
    static Rotation from_matrix_unchecked(const Mat3& m) { return Rotation(m, 0); }

    static Rotation identity() { return Rotation(); }

    const Mat3& matrix() const { return m_; }
    Rotation transposed() const { return Rotation(m_.transpose(), 0); }

    Rotation operator*(const Rotation& rhs) const { return Rotation(m_ * rhs.m_, 0); }
    Vec3 operator*(const Vec3& v) const { return m_ * v; }

private:
    Rotation(const Mat3& m, int) : m_(m) {}
    Mat3 m_;
};

inline constexpr double kRotationTol = 1e-12;
inline constexpr double kVexSymmetryTol = 1e-9;

/// ||R^T R - I||_F, for drift checks.
double orthogonality_error(const Mat3& m);

SkewMatrix hat(const Vec3& v);

/// Inverse of hat on the skew part (M - M^T)/2. Throws std::invalid_argument
/// if the symmetric part of M exceeds 1e-9 (inf-norm); that indicates a
/// caller bug, not a numerical issue.
Vec3 vex(const Mat3& m);

/// Closed-form exponential (Rodrigues). Falls back to a 2nd-order expansion
/// of the sinc-type coefficients below ||v|| = 1e-8.
Rotation expm(const SkewMatrix& m);

/// expm(hat(v)) without forming the skew matrix twice.
Rotation exp_so3(const Vec3& v);

/// Rotation angle in [0, pi]; acos argument clamped to [-1, 1].
double principal_angle(const Rotation& q);

}  // namespace attfilt
