#include "nct/length.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace nct {

NegativeTypeFunction NegativeTypeFunction::word_length(const GroupDesc& g) {
    NegativeTypeFunction f;
    f.group_ = g;
    f.kind_ = LengthKind::WordLength;
    if (g.kind == GroupKind::Heisenberg) f.bfs_ = std::make_shared<BfsTable>();
    return f;
}

NegativeTypeFunction NegativeTypeFunction::table(
    const GroupDesc& g,
    std::unordered_map<GroupElement, double, GroupElementHash> values) {
    NegativeTypeFunction f;
    f.group_ = g;
    f.kind_ = LengthKind::Table;
    f.table_ = std::make_shared<const std::unordered_map<GroupElement, double, GroupElementHash>>(
        std::move(values));
    return f;
}

NegativeTypeFunction root_transform(const NegativeTypeFunction& ell, double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("root_transform: beta must lie in (0,1)");
    NegativeTypeFunction f = ell;
    f.kind_ = LengthKind::BetaRoot;
    f.beta_ = ell.beta_ * beta;
    return f;
}

void NegativeTypeFunction::prepare(int radius) const {
    if (!bfs_) return;
    std::lock_guard<std::mutex> lock(bfs_->mutex);
    if (bfs_->radius >= radius) return;
    // Full BFS from the identity; the table is small for the radii in use.
    bfs_->dist.clear();
    std::deque<GroupElement> frontier;
    GroupElement e = identity(group_);
    bfs_->dist[e] = 0;
    frontier.push_back(e);
    std::vector<GroupElement> gens;
    for (int i = 0; i < group_.generator_count(); ++i) {
        gens.push_back(generator(group_, i, false));
        gens.push_back(generator(group_, i, true));
    }
    while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        int d = bfs_->dist[cur];
        if (d == radius) continue;
        for (const auto& s : gens) {
            GroupElement nxt = compose(cur, s);
            if (bfs_->dist.emplace(nxt, d + 1).second) frontier.push_back(nxt);
        }
    }
    bfs_->radius = radius;
}

double NegativeTypeFunction::base_value(const GroupElement& g) const {
    if (g.group != group_)
        throw std::invalid_argument("length evaluated on element of a different group");
    if (kind_ == LengthKind::Table || table_) {
        auto it = table_->find(g);
        if (it == table_->end())
            throw std::invalid_argument("table length: element not in table: " + format_payload(g));
        return it->second;
    }
    if (group_.kind == GroupKind::Heisenberg) {
        if (!bfs_) throw std::logic_error("missing BFS table");
        std::lock_guard<std::mutex> lock(bfs_->mutex);
        auto it = bfs_->dist.find(g);
        if (it == bfs_->dist.end())
            throw std::invalid_argument(
                "H3 word length outside enumerated radius: " + format_payload(g));
        return double(it->second);
    }
    return double(closed_word_length(g));
}

double NegativeTypeFunction::evaluate(const GroupElement& g) const {
    double v = base_value(g);
    if (kind_ == LengthKind::BetaRoot) return std::pow(v, beta_);
    return v;
}

}  // namespace nct
