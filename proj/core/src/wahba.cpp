#include "attfilt/wahba.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace attfilt {

namespace {

void check_rank3(const Eigen::Matrix3Xd& cols, const char* who) {
    Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(cols);
    const auto& s = svd.singularValues();
    if (!(s(2) > kRankTol * s(0))) {
        throw std::invalid_argument(std::string(who) + ": direction set is not rank 3");
    }
}

}  // namespace

DirectionSet DirectionSet::from_columns(const Eigen::Matrix3Xd& cols, Frame frame) {
    if (cols.cols() < 3) {
        throw std::invalid_argument("DirectionSet: need at least 3 columns (2-vector sets must be augmented)");
    }
    if (!cols.allFinite()) {
        throw std::invalid_argument("DirectionSet: non-finite entries");
    }
    check_rank3(cols, "DirectionSet");
    return DirectionSet(cols, frame, static_cast<int>(cols.cols()));
}

DirectionSet DirectionSet::from_raw(const Eigen::Matrix3Xd& raw, Frame frame) {
    if (raw.cols() == 2) {
        return augment_two_vectors(raw.col(0), raw.col(1), frame);
    }
    return from_columns(raw, frame);
}

DirectionSet DirectionSet::unchecked(const Eigen::Matrix3Xd& cols, Frame frame, int raw_count) {
    return DirectionSet(cols, frame, raw_count);
}

bool DirectionSet::well_conditioned(double tol) const {
    Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(cols_);
    const auto& s = svd.singularValues();
    return s(2) > tol * s(0);
}

DirectionSet augment_two_vectors(const Vec3& u1, const Vec3& u2, Frame frame) {
    const double n1 = u1.norm();
    const double n2 = u2.norm();
    if (n1 == 0.0 || n2 == 0.0) {
        throw std::invalid_argument("augment_two_vectors: zero-length direction");
    }
    const Vec3 cross = u1.cross(u2);
    // sin of the angle between the pair
    if (cross.norm() <= kParallelTol * n1 * n2) {
        throw std::invalid_argument("augment_two_vectors: directions are parallel; attitude is unobservable");
    }
    Eigen::Matrix3Xd cols(3, 3);
    cols.col(0) = u1;
    cols.col(1) = u2;
    cols.col(2) = cross;
    return DirectionSet::unchecked(cols, frame, 2);
}

WahbaWeights build_weights(const DirectionSet& E, const Vec3& d, TrailingWeightFill fill) {
    for (int i = 0; i < 3; ++i) {
        if (!(d(i) > 0.0)) {
            throw std::invalid_argument("build_weights: d entries must be positive");
        }
        for (int j = i + 1; j < 3; ++j) {
            const double gap = std::abs(d(i) - d(j)) / std::max(d(i), d(j));
            if (gap < kWeightGapTol) {
                throw std::invalid_argument("build_weights: d entries must be pairwise distinct (relative gap >= 1e-3)");
            }
        }
    }

    const Eigen::Matrix3Xd& e = E.columns();
    const int k = E.count();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    Eigen::MatrixXd v = svd.matrixV();
    Vec3 sigma = svd.singularValues().head<3>();

    if (!(sigma(2) > kRankTol * sigma(0))) {
        throw std::invalid_argument("build_weights: E is rank deficient");
    }
    // Deterministic convention: keep U_E in SO(3), flipping the paired V
    // column so E = U Sigma V^T is preserved.
    if (u.determinant() < 0.0) {
        u.col(2) *= -1.0;
        v.col(2) *= -1.0;
    }

    Eigen::VectorXd w0 = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < 3; ++i) {
        w0(i) = d(i) / (sigma(i) * sigma(i));
    }
    if (fill == TrailingWeightFill::epsilon) {
        for (int i = 3; i < k; ++i) {
            w0(i) = 1e-9;
        }
    }

    WahbaWeights out;
    out.W = v * w0.asDiagonal() * v.transpose();
    out.d = d;
    out.K = e * out.W * e.transpose();
    out.U_E = u;
    out.sigma = sigma;
    return out;
}

double potential(const Rotation& rhat, const DirectionSet& um, const DirectionSet& e,
                 const WahbaWeights& w) {
    if (um.count() != e.count() || w.W.rows() != e.count()) {
        throw std::invalid_argument("potential: direction set / weight dimensions disagree");
    }
    const Eigen::Matrix3Xd diff = e.columns() - rhat.matrix() * um.columns();
    return 0.5 * (diff.transpose() * diff * w.W).trace();
}

double potential(const Rotation& rhat, const DirectionSet& um, const DirectionSet& e,
                 const WahbaWeights& w, const std::function<double(double)>& phi) {
    const double raw = potential(rhat, um, e, w);
    return phi ? phi(raw) : raw;
}

Mat3 wahba_l_matrix(const DirectionSet& e, const WahbaWeights& w, const DirectionSet& utilde) {
    if (utilde.count() != e.count() || w.W.rows() != e.count()) {
        throw std::invalid_argument("wahba_l_matrix: direction set / weight dimensions disagree");
    }
    return e.columns() * w.W * utilde.columns().transpose();
}

Vec3 s_l(const Rotation& rhat, const Mat3& l) {
    // l^T rhat - rhat^T l is skew for any l, exactly so in floating point.
    return vex(l.transpose() * rhat.matrix() - rhat.matrix().transpose() * l);
}

Vec3 s_k_residual(const Mat3& k, const Rotation& q) {
    return vex(k * q.matrix().transpose() - q.matrix() * k);
}

std::array<Rotation, 4> critical_points(const WahbaWeights& w) {
    std::array<Rotation, 4> out{Rotation::identity(), Rotation::identity(),
                                Rotation::identity(), Rotation::identity()};
    for (int i = 0; i < 3; ++i) {
        const Vec3 a = w.U_E.col(i);
        out[static_cast<std::size_t>(i) + 1] =
            Rotation::from_matrix_unchecked(2.0 * (a * a.transpose()) - Mat3::Identity());
    }
    return out;
}

}  // namespace attfilt
