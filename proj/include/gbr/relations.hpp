#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbr/reflect.hpp"
#include "gbr/word.hpp"

namespace gbr {

// A defining relation of the category: two parallel words declared equal.
// Base relations carry provenance "base"; a relation discovered by reflecting
// relation R along axis a carries provenance "a(R)" and name "R.a".
struct Relation {
    std::string name;
    Word lhs;
    Word rhs;
    std::string provenance;
};

// The nine defining relations, in diagram order (first step acts first).
//
// Both orders of each inverse pair are stored: the crossings are mutually
// inverse, so neither order is privileged.
inline const std::vector<Relation>& base_relations() {
    static const std::vector<Relation> table = [] {
        using P = Partition;
        std::vector<Relation> rels;
        auto add = [&rels](std::string name, Word lhs, Word rhs) {
            rels.push_back({std::move(name), std::move(lhs), std::move(rhs), "base"});
        };
        add("multifork",
            word_of(P::P3, {fork(P::P3, P::P21), fork(P::P21, P::P111)}),
            word_of(P::P3, {fork(P::P3, P::P12), fork(P::P12, P::P111)}));
        const Generator t1 = strand_cross(true, 1), t2 = strand_cross(true, 2);
        const Generator d1 = strand_cross(false, 1), d2 = strand_cross(false, 2);
        add("braid",
            word_of(P::P111, {t1, t2, t1}),
            word_of(P::P111, {t2, t1, t2}));
        add("inverse-mixed-12",
            word_of(P::P12, {neg_cross(P::P12, P::P21), pos_cross(P::P21, P::P12)}),
            Word(P::P12));
        add("inverse-mixed-21",
            word_of(P::P21, {pos_cross(P::P21, P::P12), neg_cross(P::P12, P::P21)}),
            Word(P::P21));
        add("inverse-pos1-td", word_of(P::P111, {t1, d1}), Word(P::P111));
        add("inverse-pos1-dt", word_of(P::P111, {d1, t1}), Word(P::P111));
        add("inverse-pos2-td", word_of(P::P111, {t2, d2}), Word(P::P111));
        add("inverse-pos2-dt", word_of(P::P111, {d2, t2}), Word(P::P111));
        add("pitchfork",
            word_of(P::P21, {pos_cross(P::P21, P::P12), fork(P::P12, P::P111)}),
            word_of(P::P21, {fork(P::P21, P::P111), t2, t1}));
        return rels;
    }();
    return table;
}

namespace detail {

// Dedup key: the two sides in word order, so a relation and its flip collide.
inline std::pair<Word, Word> relation_canon(const Word& lhs, const Word& rhs) {
    return lhs <= rhs ? std::pair{lhs, rhs} : std::pair{rhs, lhs};
}

}  // namespace detail

// Closure of the base relations under the three reflections, breadth first.
// Orientation is inherited: the image of a parent's lhs stays on the left.
// The set is finite (every base relation has a finite reflection orbit) and
// the traversal order is fixed, so indices are stable across runs.
inline const std::vector<Relation>& relation_closure() {
    static const std::vector<Relation> table = [] {
        static constexpr std::pair<Axis, const char*> tagged_axes[] = {
            {Axis::Vertical, "v"}, {Axis::Horizontal, "h"}, {Axis::Blackboard, "b"}};
        std::vector<Relation> rels = base_relations();
        std::set<std::pair<Word, Word>> seen;
        for (const Relation& r : rels) seen.insert(detail::relation_canon(r.lhs, r.rhs));
        for (std::size_t i = 0; i < rels.size(); ++i) {
            for (const auto& [axis, tag] : tagged_axes) {
                Word lhs = reflect(rels[i].lhs, axis);
                Word rhs = reflect(rels[i].rhs, axis);
                if (!seen.insert(detail::relation_canon(lhs, rhs)).second) continue;
                rels.push_back({rels[i].name + "." + tag, std::move(lhs), std::move(rhs),
                                std::string(tag) + "(" + rels[i].name + ")"});
            }
        }
        return rels;
    }();
    return table;
}

inline std::optional<std::size_t> relation_index(std::string_view name) {
    const auto& rels = relation_closure();
    for (std::size_t i = 0; i < rels.size(); ++i)
        if (rels[i].name == name) return i;
    return std::nullopt;
}

}  // namespace gbr
