#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gbr/formal_sum.hpp"
#include "gbr/word.hpp"

namespace gbr {

// Decategorified split calculus: words become formal sums of fork/merge
// atoms, and two words are compared through their reduced sums. Direct-sum
// facts hold at generic v; anything routed through a cone is only an Euler
// class, so such sums are compared at v = -1.

enum class SplitVerdict { EqualGenericV, EqualAtMinusOne, Distinct };

namespace detail {

struct ReduceRule {
    Word pattern;
    // Replacement terms sharing the pattern's endpoints.
    std::vector<std::pair<Word, ShiftPoly>> replacement;
    bool cone = false;
};

// The reduction system on atom words. Ordering in the table is the
// tie-break order when several rules match at one position.
inline const std::vector<ReduceRule>& reduce_rules() {
    static const std::vector<ReduceRule> rules = [] {
        using P = Partition;
        const ShiftPoly one = ShiftPoly::one();
        const ShiftPoly v2(1, 2);
        const ShiftPoly sph = one + v2;              // spherical pair: 1 + v^2
        const ShiftPoly proj = one + v2 + ShiftPoly(1, 4);  // projective pair
        std::vector<ReduceRule> rules;

        // Adjoint pairs collapse to shifted identities.
        rules.push_back({word_of(P::P12, {fork(P::P12, P::P111), merge(P::P111, P::P12)}),
                         {{Word(P::P12), sph}},
                         false});
        rules.push_back({word_of(P::P21, {fork(P::P21, P::P111), merge(P::P111, P::P21)}),
                         {{Word(P::P21), sph}},
                         false});
        rules.push_back({word_of(P::P3, {fork(P::P3, P::P12), merge(P::P12, P::P3)}),
                         {{Word(P::P3), proj}},
                         false});
        rules.push_back({word_of(P::P3, {fork(P::P3, P::P21), merge(P::P21, P::P3)}),
                         {{Word(P::P3), proj}},
                         false});

        // Multifork, oriented toward the 12 edge, and its adjoint dual.
        rules.push_back({word_of(P::P3, {fork(P::P3, P::P21), fork(P::P21, P::P111)}),
                         {{word_of(P::P3, {fork(P::P3, P::P12), fork(P::P12, P::P111)}), one}},
                         false});
        rules.push_back({word_of(P::P111, {merge(P::P111, P::P21), merge(P::P21, P::P3)}),
                         {{word_of(P::P111, {merge(P::P111, P::P12), merge(P::P12, P::P3)}), one}},
                         false});

        // Skein triangles: the four-letter zigzag through (1,1,1) is the cone
        // over the route through (3). Exact only in Euler classes.
        rules.push_back({word_of(P::P12, {fork(P::P12, P::P111), merge(P::P111, P::P21),
                                          fork(P::P21, P::P111), merge(P::P111, P::P12)}),
                         {{word_of(P::P12, {merge(P::P12, P::P3), fork(P::P3, P::P12)}), one},
                          {Word(P::P12), v2}},
                         true});
        rules.push_back({word_of(P::P21, {fork(P::P21, P::P111), merge(P::P111, P::P12),
                                          fork(P::P12, P::P111), merge(P::P111, P::P21)}),
                         {{word_of(P::P21, {merge(P::P21, P::P3), fork(P::P3, P::P21)}), one},
                          {Word(P::P21), v2}},
                         true});

        // Completions of the critical pairs between the multifork rules and
        // the adjoint collapses; without these the system is not confluent.
        rules.push_back({word_of(P::P3, {fork(P::P3, P::P12), fork(P::P12, P::P111),
                                         merge(P::P111, P::P21)}),
                         {{word_of(P::P3, {fork(P::P3, P::P21)}), sph}},
                         false});
        rules.push_back({word_of(P::P21, {fork(P::P21, P::P111), merge(P::P111, P::P12),
                                          merge(P::P12, P::P3)}),
                         {{word_of(P::P21, {merge(P::P21, P::P3)}), sph}},
                         false});
        return rules;
    }();
    return rules;
}

inline bool rule_matches(const Word& w, std::size_t pos, const ReduceRule& rule) {
    const std::size_t k = rule.pattern.size();
    if (pos + k > w.size()) return false;
    if (object_at(w, pos) != rule.pattern.source()) return false;
    for (std::size_t j = 0; j < k; ++j)
        if (!(w.steps()[pos + j] == rule.pattern.steps()[j])) return false;
    return true;
}

// Leftmost redex; among rules matching there, shortest pattern wins, then
// table order. Returns (position, rule index) or nothing.
inline std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) {
    const auto& rules = reduce_rules();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        std::optional<std::size_t> best;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            if (!rule_matches(w, pos, rules[r])) continue;
            if (!best || rules[r].pattern.size() < rules[*best].pattern.size()) best = r;
        }
        if (best) return std::pair{pos, *best};
    }
    return std::nullopt;
}

inline Word splice(const Word& w, std::size_t pos, std::size_t cut, const Word& insert) {
    Word out(w.source());
    for (std::size_t j = 0; j < pos; ++j) out.append(w.steps()[j]);
    for (const Generator& g : insert.steps()) out.append(g);
    for (std::size_t j = pos + cut; j < w.size(); ++j) out.append(w.steps()[j]);
    return out;
}

}  // namespace detail

inline bool fork_merge_only(const Word& w) {
    for (const Generator& g : w.steps())
        if (g.kind != GenKind::Fork && g.kind != GenKind::Merge) return false;
    return true;
}

inline bool is_irreducible(const Word& w) {
    return fork_merge_only(w) && !detail::find_redex(w);
}

// A validated irreducible fork/merge word. The empty word at each object is
// the identity atom.
struct Atom {
    Word word;

    explicit Atom(Word w) : word(std::move(w)) {
        if (!fork_merge_only(word))
            throw std::invalid_argument("atom words contain only forks and merges");
        if (detail::find_redex(word))
            throw std::invalid_argument("atom word is reducible");
    }
};

// Rewrites every term to irreducible atoms. Linear, idempotent, and
// terminating: every rule either shortens its match or rewrites it to a
// smaller word in the pinned order. Marks the sum cone-tainted when a skein
// rule fires.
inline FormalSum reduce(const FormalSum& s) {
    FormalSum out(s.source(), s.target());
    if (s.cone_tainted()) out.mark_cone_tainted();
    std::vector<std::pair<Word, ShiftPoly>> pending(s.terms().begin(), s.terms().end());
    while (!pending.empty()) {
        auto [w, c] = std::move(pending.back());
        pending.pop_back();
        auto redex = detail::find_redex(w);
        if (!redex) {
            out.add_term(w, c);
            continue;
        }
        const auto& rule = detail::reduce_rules()[redex->second];
        if (rule.cone) out.mark_cone_tainted();
        for (const auto& [rw, rc] : rule.replacement)
            pending.emplace_back(detail::splice(w, redex->first, rule.pattern.size(), rw), c * rc);
    }
    return out;
}

namespace detail {

// The split class of a single generator. Forks are atoms; merges are shifted
// right adjoints; crossings contribute their cone's Euler bookkeeping and
// taint the sum.
inline FormalSum generator_class(const Generator& g) {
    using P = Partition;
    const ShiftPoly one = ShiftPoly::one();
    const ShiftPoly v(1, 1), vinv(1, -1), vinv2(1, -2);
    FormalSum out(g.source, g.target);
    switch (g.kind) {
        case GenKind::Identity:
            out.add_term(Word(g.source), one);
            return out;
        case GenKind::Fork:
            out.add_term(word_of(g.source, {g}), one);
            return out;
        case GenKind::Merge:
            // G = R[1] over a (1,1)-edge, G = R[2] over a (1,2)/(2,1)-edge.
            out.add_term(word_of(g.source, {g}), g.source == P::P111 ? vinv : vinv2);
            return out;
        case GenKind::PosCross:
        case GenKind::NegCross:
            break;
    }
    out.mark_cone_tainted();
    const bool positive = g.kind == GenKind::PosCross;
    if (g.source == P::P111) {
        // Strand crossings: cone of the trace from the fork/merge pair over
        // the adjacent strands. Position 1 pairs through 21, position 2
        // through 12.
        const P mid = g.position == 1 ? P::P21 : P::P12;
        const Word pair = word_of(P::P111, {merge(P::P111, mid), fork(mid, P::P111)});
        if (positive) {
            out.add_term(Word(P::P111), one);
            out.add_term(pair, -one);
        } else {
            out.add_term(pair, vinv);
            out.add_term(Word(P::P111), -v);
        }
        return out;
    }
    // Mixed crossings: cone between the route through (1,1,1) and the route
    // through (3).
    const Word through_111 =
        word_of(g.source, {fork(g.source, P::P111), merge(P::P111, g.target)});
    const Word through_3 = word_of(g.source, {merge(g.source, P::P3), fork(P::P3, g.target)});
    if (positive) {
        out.add_term(through_111, vinv);
        out.add_term(through_3, -vinv);
    } else {
        out.add_term(through_3, vinv2);
        out.add_term(through_111, -one);
    }
    return out;
}

}  // namespace detail

// The split class of a word: substitute every generator's class, distribute,
// and reduce. Whole-word composition stays reduced step by step, which keeps
// the intermediate sums small.
inline FormalSum atomize(const Word& w) {
    FormalSum acc = FormalSum::identity(w.source());
    for (const Generator& g : w.steps())
        acc = reduce(compose(acc, detail::generator_class(g)));
    return acc;
}

// Compares two already-reduced sums. Exact term equality without any cone
// involvement is a generic-v identity; with cones, only the v = -1 Euler
// comparison is meaningful. Distinct genuinely refutes equality.
inline SplitVerdict split_equal_sums(const FormalSum& a, const FormalSum& b) {
    if (a.source() != b.source() || a.target() != b.target())
        throw EndpointMismatch(
            std::string(to_string(a.source())) + ">" + std::string(to_string(a.target())),
            std::string(to_string(b.source())) + ">" + std::string(to_string(b.target())));
    if (a == b && !a.cone_tainted() && !b.cone_tainted()) return SplitVerdict::EqualGenericV;
    if (a.at_minus_one() == b.at_minus_one()) return SplitVerdict::EqualAtMinusOne;
    return SplitVerdict::Distinct;
}

inline SplitVerdict split_equal(const Word& w1, const Word& w2) {
    if (w1.source() != w2.source() || w1.target() != w2.target())
        throw EndpointMismatch(
            std::string(to_string(w1.source())) + ">" + std::string(to_string(w1.target())),
            std::string(to_string(w2.source())) + ">" + std::string(to_string(w2.target())));
    return split_equal_sums(atomize(w1), atomize(w2));
}

// Euler class of the three-term twist complex on the chosen mixed object:
// [id] - [FR] + v^2 [FR], with FR the projective pair through (3). At v = -1
// the two FR terms cancel.
inline FormalSum ptwist_class(Partition side = Partition::P12) {
    using P = Partition;
    if (side != P::P12 && side != P::P21)
        throw std::invalid_argument("twist classes live on the mixed objects");
    FormalSum out(side, side);
    const Word fr = word_of(side, {merge(side, P::P3), fork(P::P3, side)});
    out.add_term(Word(side), ShiftPoly::one());
    out.add_term(fr, ShiftPoly(1, 2) - ShiftPoly::one());
    return out;
}

}  // namespace gbr
