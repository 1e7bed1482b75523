#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nct/group.hpp"
#include "nct/length.hpp"

namespace nct {

/// <c(g), c(h)> = (ell(g) + ell(h) - ell(g^{-1} h)) / 2, the Gram kernel of
/// the cocycle representing ell; the cocycle space itself is never built.
double cocycle_gram(const NegativeTypeFunction& ell, const GroupElement& g, const GroupElement& h);

/// An orthonormal frame for span{c(x) : x in points}, carried as Gram data.
///
/// transform maps point coordinates to orthonormal coordinates:
/// transform^T * gram * transform = I_rank, and the orthonormal coordinates
/// of sum_i z_i c(x_i) are transform^T * gram * z.
struct GramFrame {
    std::vector<GroupElement> points;
    Eigen::MatrixXd gram;
    Eigen::MatrixXd transform;  // points.size() x rank
    int rank = 0;

    /// Orthonormal coordinates of a point-coordinate vector.
    Eigen::VectorXd coords(const Eigen::VectorXd& point_coeffs) const {
        return transform.transpose() * (gram * point_coeffs);
    }
    Eigen::VectorXd coords_of_point(size_t i) const {
        return transform.transpose() * gram.col(Eigen::Index(i));
    }
};

/// Builds a GramFrame by eigendecomposition of the Gram matrix, keeping
/// eigenvalues above tol_rank * max(diag); transform = V * Lambda^{-1/2}.
/// Throws if the Gram matrix has an eigenvalue below -tol_psd * max(diag)
/// (ell is not of negative type on this set).
GramFrame local_frame(const NegativeTypeFunction& ell, const std::vector<GroupElement>& points,
                      double tol_rank = 1e-8, double tol_psd = 1e-10);

/// Cross inner products <u_i, c(y)> for the frame's orthonormal vectors.
Eigen::VectorXd frame_coords_of(const NegativeTypeFunction& ell, const GramFrame& frame,
                                const GroupElement& y);

}  // namespace nct
