#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nct/group.hpp"
#include "nct/length.hpp"

namespace nct {

/// Metric ball {g : |g| <= m} in the word metric, enumerated breadth-first,
/// deduplicated through canonical forms and sorted by (word length, payload).
struct Ball {
    GroupDesc group;
    int radius = 0;
    std::vector<GroupElement> elements;
    std::vector<int> word_lengths;  // parallel to elements

    size_t size() const { return elements.size(); }
    /// Index range [first, last) of the sphere of radius m.
    std::pair<size_t, size_t> sphere_range(int m) const;
};

Ball ball_enumerate(const GroupDesc& group, int m);

/// |B_m| for the free group F_p by BFS-consistent closed form,
/// 1 + p/(p-1) ((2p-1)^m - 1). The paper's printed form
/// 1 + p/(p-1) (2p-1)^m disagrees with direct enumeration; both are exposed
/// so reports can flag the discrepancy.
long long free_ball_count(int p, int m);
long long free_ball_count_paper(int p, int m);

/// Nonzero values {ell(g) : g in ball, ell(g) > 0}, ascending with
/// multiplicity: the eigenvalue list lambda_1 <= lambda_2 <= ... of the
/// Dirichlet generator L restricted to the ball.
std::vector<double> counting_spectrum(const NegativeTypeFunction& ell, const Ball& ball);

/// Line-element singular values: every nonzero lambda contributes
/// lambda^{-1/2} twice (once per summand of the Dirac space), descending.
std::vector<double> ds_spectrum(const NegativeTypeFunction& ell, const Ball& ball);

/// Cache file format: header "group=<id> m=<m> count=<n>", then one line per
/// element "payload<TAB>word_length", LF endings.
void write_ball_cache(const Ball& ball, const std::string& path);
std::optional<Ball> read_ball_cache(const GroupDesc& group, int m, const std::string& path);

/// Loads the ball from <cache_dir>/<group>/<m>.ball or enumerates and stores
/// it. Writes are atomic (temp file + rename).
Ball cached_ball(const GroupDesc& group, int m, const std::string& cache_dir);

}  // namespace nct
