#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "nct/group.hpp"

namespace nct {

enum class LengthKind { WordLength, BetaRoot, Table };

/// A conditionally negative type candidate ell: G -> [0, inf).
///
/// WordLength evaluates the word metric in the standard generators; for
/// H3(Z) this is backed by a BFS table that must cover the queried element
/// (prepare() extends it, evaluation outside the covered radius throws).
/// BetaRoot wraps a base function as ell(g) = base(g)^beta, beta in (0,1).
/// Table looks elements up in an explicit map and throws on misses.
class NegativeTypeFunction {
public:
    static NegativeTypeFunction word_length(const GroupDesc& g);
    static NegativeTypeFunction table(const GroupDesc& g,
                                      std::unordered_map<GroupElement, double, GroupElementHash> values);

    double operator()(const GroupElement& g) const { return evaluate(g); }
    double evaluate(const GroupElement& g) const;

    const GroupDesc& group() const { return group_; }
    LengthKind kind() const { return kind_; }
    double beta() const { return beta_; }

    /// Guarantees evaluation succeeds for every element of word length <= radius.
    void prepare(int radius) const;

    friend NegativeTypeFunction root_transform(const NegativeTypeFunction& ell, double beta);

private:
    struct BfsTable {
        std::mutex mutex;
        int radius = -1;
        std::unordered_map<GroupElement, int, GroupElementHash> dist;
    };

    GroupDesc group_;
    LengthKind kind_ = LengthKind::WordLength;
    double beta_ = 1.0;  // composed exponent; 1 for plain kinds
    std::shared_ptr<BfsTable> bfs_;  // Heisenberg word length only
    std::shared_ptr<const std::unordered_map<GroupElement, double, GroupElementHash>> table_;

    double base_value(const GroupElement& g) const;
};

/// ell^beta for beta in (0,1); roots of negative type functions are again of
/// negative type (subordination).
NegativeTypeFunction root_transform(const NegativeTypeFunction& ell, double beta);

}  // namespace nct
