#include "nct/negtype.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "nct/gram.hpp"

namespace nct {

NegTypeReport negtype_check(const NegativeTypeFunction& ell,
                            const std::vector<GroupElement>& sample, double tol_psd) {
    if (sample.empty()) throw std::invalid_argument("negtype_check: empty sample");
    const size_t n = sample.size();
    Eigen::MatrixXd K(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            K(i, j) = K(j, i) = cocycle_gram(ell, sample[i], sample[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    NegTypeReport rep;
    rep.sample_size = n;
    rep.min_eigenvalue = es.eigenvalues()(0);
    rep.tolerance = tol_psd * std::max(K.diagonal().maxCoeff(), 1.0);
    rep.pass = rep.min_eigenvalue >= -rep.tolerance;
    return rep;
}

std::vector<SlownessPoint> slowness_profile(const NegativeTypeFunction& ell, const GroupElement& g,
                                            const std::vector<int>& radii) {
    int max_m = 0;
    for (int m : radii) max_m = std::max(max_m, m);
    Ball ball = ball_enumerate(ell.group(), max_m);
    GroupElement ginv = inverse(g);
    // g^{-1} g' can leave the sphere by at most |g| steps; cover the translates.
    ell.prepare(max_m + word_length_upper_bound(g));
    std::vector<SlownessPoint> out;
    for (int m : radii) {
        auto [lo, hi] = ball.sphere_range(m);
        if (lo == hi) throw std::invalid_argument("slowness_profile: empty sphere");
        double sup = 0.0;
        bool any = false;
        for (size_t i = lo; i < hi; ++i) {
            double lp = ell(ball.elements[i]);
            if (lp <= 0.0) continue;
            any = true;
            double lt = ell(compose(ginv, ball.elements[i]));
            sup = std::max(sup, std::abs(lt - lp) / std::sqrt(lp));
        }
        if (!any) throw std::invalid_argument("slowness_profile: sphere carries no positive ell");
        out.push_back({m, sup});
    }
    return out;
}

WeightReport weight_check(const NegativeTypeFunction& ell,
                          const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                          double tol) {
    WeightReport rep;
    for (const auto& [s, t] : pairs) {
        double lhs = ell(compose(s, t));
        double rhs = ell(s) + ell(t);
        ++rep.pairs_checked;
        if (lhs > rhs + tol * std::max(1.0, rhs)) {
            rep.pass = false;
            if (rep.violations.size() < 16) rep.violations.push_back({s, t, lhs, rhs});
        }
    }
    return rep;
}

std::vector<std::pair<GroupElement, GroupElement>> all_pairs(
    const std::vector<GroupElement>& sample) {
    std::vector<std::pair<GroupElement, GroupElement>> out;
    out.reserve(sample.size() * sample.size());
    for (const auto& s : sample)
        for (const auto& t : sample) out.emplace_back(s, t);
    return out;
}

double properness_proxy(const NegativeTypeFunction& ell, const Ball& ball) {
    auto [lo, hi] = ball.sphere_range(ball.radius);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = lo; i < hi; ++i) best = std::min(best, ell(ball.elements[i]));
    return best;
}

}  // namespace nct
