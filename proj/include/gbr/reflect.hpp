#pragma once

#include <algorithm>
#include <vector>

#include "gbr/word.hpp"

namespace gbr {

// The three reflections of a braid diagram. Each is an involution and sends
// legal words to legal words.
//
//   Vertical:   flip top-to-bottom. Word order reverses, forks become merges
//               (and back) with endpoints swapped, crossings swap parity.
//   Horizontal: flip left-to-right. Every partition is reversed (12 <-> 21),
//               crossings swap parity, and a crossing of strands at (1,1,1)
//               moves to the mirrored adjacent pair (position 1 <-> 2).
//   Blackboard: flip through the page. Only crossing parity changes.
enum class Axis { Vertical, Horizontal, Blackboard };

constexpr GenKind flip_parity(GenKind k) {
    if (k == GenKind::PosCross) return GenKind::NegCross;
    if (k == GenKind::NegCross) return GenKind::PosCross;
    return k;
}

constexpr Generator reflect(const Generator& g, Axis axis) {
    switch (axis) {
        case Axis::Vertical: {
            GenKind k = g.kind;
            if (k == GenKind::Fork) k = GenKind::Merge;
            else if (k == GenKind::Merge) k = GenKind::Fork;
            else k = flip_parity(k);
            return {k, g.target, g.source, g.position};
        }
        case Axis::Horizontal: {
            std::uint8_t pos = g.position == 0 ? std::uint8_t{0}
                                               : static_cast<std::uint8_t>(3 - g.position);
            return {flip_parity(g.kind), reversed(g.source), reversed(g.target), pos};
        }
        case Axis::Blackboard:
            return {flip_parity(g.kind), g.source, g.target, g.position};
    }
    return g;
}

inline Word reflect(const Word& w, Axis axis) {
    if (axis == Axis::Vertical) {
        Word out(w.target());
        for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it)
            out.append(reflect(*it, axis));
        return out;
    }
    Word out(axis == Axis::Horizontal ? reversed(w.source()) : w.source());
    for (const Generator& g : w.steps()) out.append(reflect(g, axis));
    return out;
}

inline constexpr std::array<Axis, 3> all_axes{Axis::Vertical, Axis::Horizontal, Axis::Blackboard};

}  // namespace gbr
