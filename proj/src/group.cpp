#include "nct/group.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace nct {

std::string GroupDesc::id() const {
    switch (kind) {
        case GroupKind::Free: return "f" + std::to_string(rank);
        case GroupKind::Lattice: return "z" + std::to_string(rank);
        case GroupKind::Heisenberg: return "h3";
    }
    return "?";
}

GroupDesc GroupDesc::from_id(const std::string& id) {
    if (id == "h3") return GroupDesc{GroupKind::Heisenberg, 2};
    if (id.size() >= 2 && (id[0] == 'f' || id[0] == 'z')) {
        int r = std::atoi(id.c_str() + 1);
        if (r >= 1)
            return GroupDesc{id[0] == 'f' ? GroupKind::Free : GroupKind::Lattice, r};
    }
    throw std::invalid_argument("unknown group id: " + id);
}

int GroupDesc::generator_count() const {
    return kind == GroupKind::Heisenberg ? 2 : rank;
}

bool GroupElement::is_identity() const {
    if (group.kind == GroupKind::Free) return word.empty();
    for (int32_t v : word)
        if (v != 0) return false;
    return true;
}

GroupElement identity(const GroupDesc& g) {
    switch (g.kind) {
        case GroupKind::Free: return {g, {}};
        case GroupKind::Lattice: return {g, std::vector<int32_t>(g.rank, 0)};
        case GroupKind::Heisenberg: return {g, {0, 0, 0}};
    }
    return {g, {}};
}

GroupElement generator(const GroupDesc& g, int index, bool inv) {
    if (index < 0 || index >= g.generator_count())
        throw std::invalid_argument("generator index out of range");
    switch (g.kind) {
        case GroupKind::Free:
            return {g, {inv ? -(index + 1) : (index + 1)}};
        case GroupKind::Lattice: {
            auto e = identity(g);
            e.word[index] = inv ? -1 : 1;
            return e;
        }
        case GroupKind::Heisenberg: {
            GroupElement e = identity(g);
            e.word[index] = inv ? -1 : 1;
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group)
        throw std::invalid_argument("compose: group mismatch");
    switch (a.group.kind) {
        case GroupKind::Free: {
            GroupElement out{a.group, a.word};
            for (int32_t letter : b.word) {
                if (!out.word.empty() && out.word.back() == -letter)
                    out.word.pop_back();
                else
                    out.word.push_back(letter);
            }
            return out;
        }
        case GroupKind::Lattice: {
            GroupElement out{a.group, a.word};
            for (size_t i = 0; i < out.word.size(); ++i) out.word[i] += b.word[i];
            return out;
        }
        case GroupKind::Heisenberg: {
            // (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')
            int64_t x = a.word[0], y = a.word[1], z = a.word[2];
            int64_t xp = b.word[0], yp = b.word[1], zp = b.word[2];
            return {a.group, {int32_t(x + xp), int32_t(y + yp), int32_t(z + zp + x * yp)}};
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement inverse(const GroupElement& a) {
    switch (a.group.kind) {
        case GroupKind::Free: {
            GroupElement out{a.group, {}};
            out.word.reserve(a.word.size());
            for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
                out.word.push_back(-*it);
            return out;
        }
        case GroupKind::Lattice: {
            GroupElement out = a;
            for (auto& v : out.word) v = -v;
            return out;
        }
        case GroupKind::Heisenberg: {
            int64_t x = a.word[0], y = a.word[1], z = a.word[2];
            return {a.group, {int32_t(-x), int32_t(-y), int32_t(-z + x * y)}};
        }
    }
    throw std::logic_error("unreachable");
}

bool has_closed_word_length(const GroupDesc& g) {
    return g.kind != GroupKind::Heisenberg;
}

int closed_word_length(const GroupElement& a) {
    switch (a.group.kind) {
        case GroupKind::Free:
            return int(a.word.size());
        case GroupKind::Lattice: {
            int s = 0;
            for (int32_t v : a.word) s += std::abs(v);
            return s;
        }
        case GroupKind::Heisenberg:
            throw std::invalid_argument("H3(Z) word length has no closed form; use a BFS table");
    }
    throw std::logic_error("unreachable");
}

int word_length_upper_bound(const GroupElement& a) {
    if (has_closed_word_length(a.group)) return closed_word_length(a);
    // H3: reach (x,y,0) directly, then produce the central part from
    // commutators: z^c = [a^k, b^q] z^r with k = ceil(sqrt(c)), q <= k,
    // r < k, costing at most 8k + 4 steps.
    int64_t x = a.word[0], y = a.word[1], z = a.word[2];
    int64_t c = std::abs(z);
    int k = 0;
    while (int64_t(k) * k < c) ++k;
    return int(std::abs(x) + std::abs(y)) + 8 * k + 4;
}

bool payload_less(const GroupElement& a, const GroupElement& b) {
    return a.word < b.word;
}

std::string format_payload(const GroupElement& a) {
    if (a.is_identity()) return "e";
    std::ostringstream os;
    bool first = true;
    if (a.group.kind == GroupKind::Free) {
        for (int32_t v : a.word) {
            if (!first) os << ' ';
            first = false;
            if (v < 0) os << '-';
            os << char('a' + std::abs(v) - 1);
        }
    } else {
        for (int32_t v : a.word) {
            if (!first) os << ' ';
            first = false;
            os << v;
        }
    }
    return os.str();
}

GroupElement parse_payload(const GroupDesc& g, const std::string& text) {
    if (text == "e") return identity(g);
    if (g.kind == GroupKind::Free) return parse_word(g, text);
    std::istringstream is(text);
    GroupElement out{g, {}};
    int32_t v;
    while (is >> v) out.word.push_back(v);
    size_t expect = g.kind == GroupKind::Heisenberg ? 3 : size_t(g.rank);
    if (out.word.size() != expect)
        throw std::invalid_argument("payload has wrong coordinate count: " + text);
    return out;
}

GroupElement parse_word(const GroupDesc& g, const std::string& text) {
    GroupElement acc = identity(g);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        bool inv = false;
        size_t i = 0;
        if (tok[i] == '-') {
            inv = true;
            ++i;
        }
        if (i + 1 != tok.size() || tok[i] < 'a' || tok[i] > 'z')
            throw std::invalid_argument("bad generator token: " + tok);
        int idx = tok[i] - 'a';
        acc = compose(acc, generator(g, idx, inv));
    }
    return acc;
}

size_t GroupElementHash::operator()(const GroupElement& e) const noexcept {
    // FNV-1a over the payload, salted with the group id.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(uint64_t(e.group.kind) * 131 + uint64_t(e.group.rank));
    for (int32_t v : e.word) mix(uint64_t(uint32_t(v)));
    return size_t(h);
}

}  // namespace nct
