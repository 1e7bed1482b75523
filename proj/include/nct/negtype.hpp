#pragma once

#include <vector>

#include "nct/ball.hpp"
#include "nct/group.hpp"
#include "nct/length.hpp"

namespace nct {

struct NegTypeReport {
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;  // scaled: tol_psd * max diagonal of K
    bool pass = false;
    size_t sample_size = 0;
};

/// Smallest eigenvalue of the cocycle Gram matrix
/// K(g,h) = (ell(g) + ell(h) - ell(g^{-1} h)) / 2 over the sample.
/// PASS iff min eigenvalue >= -tol_psd * max(diag K) (conditional
/// negativity of ell is equivalent to K being PSD).
NegTypeReport negtype_check(const NegativeTypeFunction& ell,
                            const std::vector<GroupElement>& sample, double tol_psd = 1e-10);

struct SlownessPoint {
    int m;
    double sup_ratio;  // sup over the sphere of |ell(g^-1 g') - ell(g')| / sqrt(ell(g'))
};

/// Empirical slowness profile of ell at g: a profile decreasing to zero
/// certifies ell(g^{-1}g') = ell(g') + o(ell(g'))^{1/2}. Throws when a
/// requested sphere is empty or carries no positive ell.
std::vector<SlownessPoint> slowness_profile(const NegativeTypeFunction& ell, const GroupElement& g,
                                            const std::vector<int>& radii);

struct WeightViolation {
    GroupElement s, t;
    double lhs, rhs;  // ell(st) vs ell(s)+ell(t)
};

struct WeightReport {
    bool pass = true;
    size_t pairs_checked = 0;
    std::vector<WeightViolation> violations;  // at most 16 retained
};

/// Subadditivity ell(st) <= ell(s) + ell(t) over the given pairs.
WeightReport weight_check(const NegativeTypeFunction& ell,
                          const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                          double tol = 1e-12);

/// All ordered pairs from a sample (convenience for ball^2 sweeps).
std::vector<std::pair<GroupElement, GroupElement>> all_pairs(
    const std::vector<GroupElement>& sample);

/// Properness proxy: the smallest ell value on the outermost sphere of the
/// ball (finite evidence that ell escapes to infinity).
double properness_proxy(const NegativeTypeFunction& ell, const Ball& ball);

}  // namespace nct
