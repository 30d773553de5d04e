#include "attfilt/so3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attfilt {

double orthogonality_error(const Mat3& m) {
    return (m.transpose() * m - Mat3::Identity()).norm();
}

Rotation Rotation::from_matrix(const Mat3& m) {
    if (!m.allFinite()) {
        throw std::invalid_argument("Rotation: non-finite entries");
    }
    if (orthogonality_error(m) > kRotationTol) {
        throw std::invalid_argument("Rotation: matrix is not orthogonal within 1e-12");
    }
    if (std::abs(m.determinant() - 1.0) > kRotationTol) {
        throw std::invalid_argument("Rotation: determinant is not +1 within 1e-12");
    }
    return Rotation(m, 0);
}

SkewMatrix hat(const Vec3& v) {
    SkewMatrix m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
        -v.y(), v.x(), 0.0;
    return m;
}

Vec3 vex(const Mat3& m) {
    const double sym = (m + m.transpose()).cwiseAbs().maxCoeff() * 0.5;
    if (!(sym <= kVexSymmetryTol)) {
        throw std::invalid_argument("vex: symmetric part exceeds 1e-9; input is not skew");
    }
    // Average of the two off-diagonal copies; exact when m is exactly skew.
    return Vec3((m(2, 1) - m(1, 2)) * 0.5,
                (m(0, 2) - m(2, 0)) * 0.5,
                (m(1, 0) - m(0, 1)) * 0.5);
}

Rotation exp_so3(const Vec3& v) {
    const double theta2 = v.squaredNorm();
    const double theta = std::sqrt(theta2);
    double a, b;  // R = I + a*hat(v) + b*hat(v)^2
    if (theta < 1e-8) {
        a = 1.0 - theta2 / 6.0;
        b = 0.5 - theta2 / 24.0;
    } else {
        a = std::sin(theta) / theta;
        b = (1.0 - std::cos(theta)) / theta2;
    }
    const Mat3 k = hat(v);
    return Rotation::from_matrix_unchecked(Mat3::Identity() + a * k + b * (k * k));
}

Rotation expm(const SkewMatrix& m) {
    return exp_so3(Vec3(m(2, 1), m(0, 2), m(1, 0)));
}

double principal_angle(const Rotation& q) {
    const double c = std::clamp((q.matrix().trace() - 1.0) * 0.5, -1.0, 1.0);
    return std::acos(c);
}

}  // namespace attfilt
