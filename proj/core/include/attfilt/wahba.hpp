#pragma once

#include <array>
#include <functional>

#include "attfilt/so3.hpp"

namespace attfilt {

enum class Frame { inertial, body };

inline constexpr double kRankTol = 1e-9;       // sigma_min > kRankTol * sigma_max
inline constexpr double kWeightGapTol = 1e-3;  // relative gap between d entries
inline constexpr double kParallelTol = 1e-6;   // min angle (rad) for a vector pair

/// A set of k >= 3 direction columns in one frame. A pair of measured
/// vectors (k = 2) is stored augmented with their cross product, so
/// raw_count() distinguishes physical columns from the synthesized one.
class DirectionSet {
public:
    /// k >= 3 columns; validates rank 3 within kRankTol.
    static DirectionSet from_columns(const Eigen::Matrix3Xd& cols, Frame frame);

    /// Any k >= 2: augments a pair with its cross product, otherwise same as
    /// from_columns.
    static DirectionSet from_raw(const Eigen::Matrix3Xd& raw, Frame frame);

    /// No rank validation. For propagation hot paths (rotation preserves
    /// rank) and for replaying possibly-degenerate recorded sets.
    static DirectionSet unchecked(const Eigen::Matrix3Xd& cols, Frame frame, int raw_count);

    int count() const { return static_cast<int>(cols_.cols()); }
    int raw_count() const { return raw_count_; }
    bool augmented() const { return raw_count_ == 2; }
    const Eigen::Matrix3Xd& columns() const { return cols_; }
    Frame frame() const { return frame_; }

    /// sigma_min > tol * sigma_max
    bool well_conditioned(double tol = kRankTol) const;

private:
    DirectionSet(Eigen::Matrix3Xd cols, Frame frame, int raw_count)
        : cols_(std::move(cols)), frame_(frame), raw_count_(raw_count) {}

    Eigen::Matrix3Xd cols_;
    Frame frame_;
    int raw_count_;
};

/// [u1, u2, u1 x u2]. Throws on zero or near-parallel inputs (angle below
/// kParallelTol), which would make the attitude unobservable.
DirectionSet augment_two_vectors(const Vec3& u1, const Vec3& u2, Frame frame);

/// Weight data for the Wahba cost built from a direction set E:
/// W (k x k) with K = E W E^T = U_E diag(d) U_E^T.
struct WahbaWeights {
    Eigen::MatrixXd W;  // k x k, symmetric
    Vec3 d;             // prescribed eigenvalues of K, distinct and positive
    Mat3 K;             // E W E^T
    Mat3 U_E;           // left singular vectors of E (det +1), eigenvectors of K
    Vec3 sigma;         // singular values of E, descending
};

/// Trailing diagonal of W0 for k > 3. Only the first three entries affect K;
/// zero keeps K exactly U_E diag(d) U_E^T, epsilon (1e-9) keeps W strictly
/// positive definite.
enum class TrailingWeightFill { zero, epsilon };

/// W = V_E W0 V_E^T with w_i = d_i / sigma_i^2. Requires rank-3 E and
/// positive d with pairwise relative gaps >= kWeightGapTol.
WahbaWeights build_weights(const DirectionSet& E, const Vec3& d,
                           TrailingWeightFill fill = TrailingWeightFill::zero);

/// Wahba cost 0.5 <E - Rhat*Um, (E - Rhat*Um) W>. Zero iff Rhat*Um = E.
double potential(const Rotation& rhat, const DirectionSet& um, const DirectionSet& e,
                 const WahbaWeights& w);

/// Generalized cost: phi applied to the raw value. phi must satisfy
/// phi(0) = 0 and phi' > 0 for the minimizer to be preserved; not enforced.
double potential(const Rotation& rhat, const DirectionSet& um, const DirectionSet& e,
                 const WahbaWeights& w, const std::function<double(double)>& phi);

/// L = E W Utilde^T, the matrix the filter's correction term is built from.
Mat3 wahba_l_matrix(const DirectionSet& e, const WahbaWeights& w, const DirectionSet& utilde);

/// S_L(Rhat) = vex(L^T Rhat - Rhat^T L).
Vec3 s_l(const Rotation& rhat, const Mat3& l);

/// S_K(Q) = vex(K Q^T - Q K); zero exactly at the critical points of
/// <I - Q, K>.
Vec3 s_k_residual(const Mat3& k, const Rotation& q);

/// The four critical points of <I - Q, K>: identity plus the half turns
/// about the eigenvectors of K.
std::array<Rotation, 4> critical_points(const WahbaWeights& w);

}  // namespace attfilt
