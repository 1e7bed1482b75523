#include "nct/gram.hpp"

#include <stdexcept>

namespace nct {

double cocycle_gram(const NegativeTypeFunction& ell, const GroupElement& g,
                    const GroupElement& h) {
    return 0.5 * (ell(g) + ell(h) - ell(compose(inverse(g), h)));
}

GramFrame local_frame(const NegativeTypeFunction& ell, const std::vector<GroupElement>& points,
                      double tol_rank, double tol_psd) {
    GramFrame f;
    f.points = points;
    const Eigen::Index n = Eigen::Index(points.size());
    f.gram.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j)
            f.gram(i, j) = f.gram(j, i) = cocycle_gram(ell, points[i], points[j]);
    if (n == 0) {
        f.transform.resize(0, 0);
        return f;
    }
    double scale = std::max(f.gram.diagonal().maxCoeff(), 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.gram);
    if (es.eigenvalues()(0) < -tol_psd * scale)
        throw std::domain_error("local_frame: Gram matrix is not PSD (ell not of negative type)");
    double cut = tol_rank * scale;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > cut) keep.push_back(i);
    f.rank = int(keep.size());
    f.transform.resize(n, f.rank);
    for (size_t k = 0; k < keep.size(); ++k)
        f.transform.col(Eigen::Index(k)) =
            es.eigenvectors().col(keep[k]) / std::sqrt(es.eigenvalues()(keep[k]));
    return f;
}

Eigen::VectorXd frame_coords_of(const NegativeTypeFunction& ell, const GramFrame& frame,
                                const GroupElement& y) {
    Eigen::VectorXd cross(frame.points.size());
    for (size_t i = 0; i < frame.points.size(); ++i)
        cross(Eigen::Index(i)) = cocycle_gram(ell, frame.points[i], y);
    return frame.transform.transpose() * cross;
}

}  // namespace nct
