#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gbr/partition.hpp"

namespace gbr {

// Generator kinds. The enumerator order realizes the pinned token order
// forks < merges < positive crossings < negative crossings; Identity sorts
// last and never occurs inside stored words.
enum class GenKind : std::uint8_t { Fork, Merge, PosCross, NegCross, Identity };

constexpr char kind_letter(GenKind k) {
    switch (k) {
        case GenKind::Fork: return 'f';
        case GenKind::Merge: return 'g';
        case GenKind::PosCross: return 't';
        case GenKind::NegCross: return 'd';
        case GenKind::Identity: return 'i';
    }
    return '?';
}

struct Generator {
    GenKind kind;
    Partition source;
    Partition target;
    // Strand position, 1 or 2. Nonzero exactly for crossings at (1,1,1):
    // there two different adjacent pairs can cross, so the endpoints alone
    // do not determine the diagram.
    std::uint8_t position = 0;

    // Default member order is the pinned lexicographic token order.
    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

constexpr Generator fork(Partition s, Partition t) { return {GenKind::Fork, s, t, 0}; }
constexpr Generator merge(Partition s, Partition t) { return {GenKind::Merge, s, t, 0}; }
constexpr Generator pos_cross(Partition s, Partition t) { return {GenKind::PosCross, s, t, 0}; }
constexpr Generator neg_cross(Partition s, Partition t) { return {GenKind::NegCross, s, t, 0}; }
constexpr Generator strand_cross(bool positive, int pos) {
    return {positive ? GenKind::PosCross : GenKind::NegCross, Partition::P111, Partition::P111,
            static_cast<std::uint8_t>(pos)};
}
constexpr Generator identity_gen(Partition p) { return {GenKind::Identity, p, p, 0}; }

constexpr bool is_crossing(GenKind k) { return k == GenKind::PosCross || k == GenKind::NegCross; }

// The legality table. Forks refine a partition by one split, merges coarsen
// by one, crossings swap the two parts of 12/21 or one adjacent strand pair
// of 111, identities fix an object.
constexpr bool is_legal(const Generator& g) {
    using enum Partition;
    const Partition s = g.source, t = g.target;
    switch (g.kind) {
        case GenKind::Fork:
            return g.position == 0 &&
                   ((s == P3 && (t == P12 || t == P21)) || ((s == P12 || s == P21) && t == P111));
        case GenKind::Merge:
            return g.position == 0 &&
                   (((s == P12 || s == P21) && t == P3) || (s == P111 && (t == P12 || t == P21)));
        case GenKind::PosCross:
        case GenKind::NegCross:
            if (s == P111 && t == P111) return g.position == 1 || g.position == 2;
            return g.position == 0 &&
                   ((s == P12 && t == P21) || (s == P21 && t == P12));
        case GenKind::Identity:
            return g.position == 0 && s == t;
    }
    return false;
}

// All 20 legal generators (16 proper ones, then the 4 identities), sorted by
// the pinned token order within each group.
inline const std::vector<Generator>& legal_generators() {
    static const std::vector<Generator> table = [] {
        using enum Partition;
        std::vector<Generator> v{
            fork(P3, P12), fork(P3, P21), fork(P12, P111), fork(P21, P111),
            merge(P12, P3), merge(P21, P3), merge(P111, P12), merge(P111, P21),
            pos_cross(P12, P21), pos_cross(P21, P12), strand_cross(true, 1), strand_cross(true, 2),
            neg_cross(P12, P21), neg_cross(P21, P12), strand_cross(false, 1), strand_cross(false, 2),
            identity_gen(P3), identity_gen(P12), identity_gen(P21), identity_gen(P111),
        };
        return v;
    }();
    return table;
}

// Compact id in [0,16) for the non-identity generators; used as a hash key
// by the rewrite engine.
inline int step_index(const Generator& g) {
    const auto& table = legal_generators();
    for (int i = 0; i < 16; ++i)
        if (table[static_cast<std::size_t>(i)] == g) return i;
    return -1;
}

inline const Generator& step_from_index(int i) {
    return legal_generators()[static_cast<std::size_t>(i)];
}

inline std::string to_token(const Generator& g) {
    std::string out;
    out += kind_letter(g.kind);
    if (g.kind == GenKind::Identity) {
        return "id[" + std::string(to_string(g.source)) + "]";
    }
    out += '[';
    if (g.position != 0) {
        out += "111,";
        out += static_cast<char>('0' + g.position);
    } else {
        out += to_string(g.source);
        out += '>';
        out += to_string(g.target);
    }
    out += ']';
    return out;
}

}  // namespace gbr
