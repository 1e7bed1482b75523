#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nct {

enum class GroupKind { Free, Lattice, Heisenberg };

/// Descriptor of one of the supported discrete groups: the free group F_p,
/// the lattice Z^d, or the integer Heisenberg group H3(Z).
struct GroupDesc {
    GroupKind kind = GroupKind::Free;
    int rank = 2;  // p for Free, d for Lattice, ignored for Heisenberg

    bool operator==(const GroupDesc&) const = default;

    std::string id() const;                    // "f2", "z3", "h3"
    static GroupDesc from_id(const std::string& id);
    int generator_count() const;               // p, d, or 2
};

/// Group element in canonical form.
///
/// Payload conventions:
///   Free:       reduced word of signed generator indices (1..p, negative for
///               inverses), no adjacent letter/inverse pair.
///   Lattice:    d integer coordinates.
///   Heisenberg: (x, y, z) with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
struct GroupElement {
    GroupDesc group;
    std::vector<int32_t> word;

    bool operator==(const GroupElement&) const = default;
    bool is_identity() const;
};

GroupElement identity(const GroupDesc& g);
GroupElement generator(const GroupDesc& g, int index, bool inverse = false);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Word length in the standard generators. Exact for Free (reduced word
/// length) and Lattice (l1 norm); Heisenberg requires a BFS table, see
/// NegativeTypeFunction.
bool has_closed_word_length(const GroupDesc& g);
int closed_word_length(const GroupElement& a);

/// Cheap upper bound on the word length, valid for every group kind
/// (exact where a closed form exists; for H3(Z) it uses the commutator
/// construction of central elements).
int word_length_upper_bound(const GroupElement& a);

/// Deterministic total order on canonical payloads (lexicographic).
bool payload_less(const GroupElement& a, const GroupElement& b);

/// Payload text: "e" for the identity; Free: "a b -a"; Lattice/Heisenberg:
/// space-separated integers.
std::string format_payload(const GroupElement& a);
GroupElement parse_payload(const GroupDesc& g, const std::string& text);

/// Parses a generator word such as "a b -a" (valid for every group kind) and
/// returns the product of the named generators.
GroupElement parse_word(const GroupDesc& g, const std::string& text);

struct GroupElementHash {
    size_t operator()(const GroupElement& e) const noexcept;
};

}  // namespace nct
