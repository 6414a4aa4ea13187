#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gbr/kbasis.hpp"
#include "gbr/koperator.hpp"
#include "gbr/parse.hpp"
#include "gbr/relations.hpp"
#include "gbr/rewrite.hpp"
#include "gbr/sampling.hpp"
#include "gbr/split.hpp"

namespace gbr {

struct CheckResult {
    std::string check;
    bool passed = false;
    std::string detail;
    std::optional<Mat> lhs_matrix;
    std::optional<Mat> rhs_matrix;
};

struct VerifyOptions {
    Budget budget{};
    unsigned seed = 7;
    std::size_t samples = 200;
    bool rewrite = true;
    bool split = true;
    bool ktheory = true;
};

namespace detail {

inline const char* verdict_name(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::EqualGenericV: return "equal at generic v";
        case SplitVerdict::EqualAtMinusOne: return "equal at v = -1";
        case SplitVerdict::Distinct: return "distinct";
    }
    return "?";
}

// Sampled equality checks use a deliberately small search budget; the point
// is cross-model consistency on whatever the search does prove, not depth.
inline Budget sampling_budget() { return Budget{600, 8}; }

}  // namespace detail

// The full check suite, sorted by check name. Every entry is deterministic
// given the options, including the seeded samples.
inline std::vector<CheckResult> run_checks(const VerifyOptions& opt = {}) {
    std::vector<CheckResult> out;
    auto add = [&out](std::string name, bool ok, std::string detail = {}) -> CheckResult& {
        out.push_back({std::move(name), ok, std::move(detail), std::nullopt, std::nullopt});
        return out.back();
    };

    for (const Relation& rel : relation_closure()) {
        if (opt.rewrite) {
            const EqualityVerdict v = equal(rel.lhs, rel.rhs, opt.budget);
            add("relation/" + rel.name + "/rewrite", v.status == EqStatus::ProvedEqual,
                v.status == EqStatus::ProvedEqual
                    ? "proved in " + std::to_string(v.witness.size()) + " step(s)"
                    : "no proof within budget");
        }
        if (opt.split) {
            const SplitVerdict v = split_equal(rel.lhs, rel.rhs);
            add("relation/" + rel.name + "/split", v != SplitVerdict::Distinct,
                detail::verdict_name(v));
        }
        if (opt.ktheory) {
            const Mat lhs = evaluate_word(rel.lhs).matrix;
            const Mat rhs = evaluate_word(rel.rhs).matrix;
            CheckResult& r = add("relation/" + rel.name + "/ktheory", lhs == rhs,
                                 lhs == rhs ? "matrices equal" : "matrices differ");
            if (lhs != rhs) {
                r.lhs_matrix = lhs;
                r.rhs_matrix = rhs;
            }
        }
    }

    using P = Partition;
    const Word flop12 = word_of(P::P12, {pos_cross(P::P12, P::P21), pos_cross(P::P21, P::P12)});
    const Word flop21 = word_of(P::P21, {pos_cross(P::P21, P::P12), pos_cross(P::P12, P::P21)});

    if (opt.ktheory) {
        const KTables& t = ktables();
        auto matrix_check = [&](std::string name, const Mat& lhs, const Mat& rhs,
                                std::string detail = {}) {
            CheckResult& r = add(std::move(name), lhs == rhs, std::move(detail));
            r.lhs_matrix = lhs;
            r.rhs_matrix = rhs;
        };
        matrix_check("anchor/adjoint-pair-12", t.R12 * t.F12, 2 * Mat::identity(3),
                     "sphere-like pair: RF = 2I");
        matrix_check("anchor/adjoint-pair-21", t.R21 * t.F21, 2 * Mat::identity(3),
                     "sphere-like pair: RF = 2I");
        matrix_check("anchor/point-pair-12", t.R12_3 * t.F3_12, 3 * Mat::identity(1),
                     "plane-like pair: RF = 3I");
        matrix_check("anchor/point-pair-21", t.R21_3 * t.F3_21, 3 * Mat::identity(1),
                     "plane-like pair: RF = 3I");
        matrix_check("anchor/multifork-class", t.F12 * t.F3_12, t.F21 * t.F3_21,
                     "both two-step forks from the point agree");
        matrix_check("anchor/full-intersection",
                     evaluate_word(parse_word("f[3>12] ; f[12>111] ; g[111>12] ; g[12>3]")).matrix,
                     6 * Mat::identity(1), "six summands in the full fork-merge loop");
        matrix_check("anchor/skein-12",
                     t.F3_12 * t.R12_3 + Mat::identity(3), t.R12 * t.F21 * t.R21 * t.F12,
                     "route through the point + identity = zigzag through the flag");
        matrix_check("anchor/skein-21",
                     t.F3_21 * t.R21_3 + Mat::identity(3), t.R21 * t.F12 * t.R12 * t.F21,
                     "route through the point + identity = zigzag through the flag");
        matrix_check("anchor/crossing-involution-1", t.T1 * t.T1, Mat::identity(6),
                     "strand crossing squares to the identity");
        matrix_check("anchor/crossing-involution-2", t.T2 * t.T2, Mat::identity(6),
                     "strand crossing squares to the identity");
        matrix_check("anchor/mixed-inverse-12", t.Tm21_12 * t.Tm12_21, Mat::identity(3),
                     "mixed crossings invert");
        matrix_check("anchor/mixed-inverse-21", t.Tm12_21 * t.Tm21_12, Mat::identity(3),
                     "mixed crossings invert");
        matrix_check("anchor/flop-flop-12", evaluate_word(flop12).matrix, Mat::identity(3),
                     "double flop acts as the twist does on classes");
        matrix_check("anchor/flop-flop-21", evaluate_word(flop21).matrix, Mat::identity(3),
                     "double flop acts as the twist does on classes");
        const long long det = bareiss_det(grothendieck_coordinates());
        add("anchor/unimodular-bases", det == 1 || det == -1,
            "basis change determinant " + std::to_string(det));
    }

    if (opt.split) {
        // The six-summand decomposition of the full loop, at the atom level.
        const Word loop = parse_word("f[3>12] ; f[12>111] ; g[111>12] ; g[12>3]");
        FormalSum atom_sum(P::P3, P::P3);
        atom_sum.add_term(loop, ShiftPoly::one());
        FormalSum expect(P::P3, P::P3);
        expect.add_term(Word(P::P3), ShiftPoly(1, 0) + ShiftPoly(2, 2) + ShiftPoly(2, 4) +
                                         ShiftPoly(1, 6));
        add("anchor/split-six-summands", reduce(atom_sum) == expect,
            "fork-merge loop atom reduces to 1 + 2v^2 + 2v^4 + v^6");

        const SplitVerdict v12 = split_equal_sums(atomize(flop12), ptwist_class(P::P12));
        add("anchor/split-flop-flop-12", v12 == SplitVerdict::EqualAtMinusOne,
            detail::verdict_name(v12));
        const SplitVerdict v21 = split_equal_sums(atomize(flop21), ptwist_class(P::P21));
        add("anchor/split-flop-flop-21", v21 == SplitVerdict::EqualAtMinusOne,
            detail::verdict_name(v21));

        // Mutually inverse strand crossings, at v = -1.
        for (int pos : {1, 2}) {
            const FormalSum prod = reduce(
                compose(atomize(word_of(P::P111, {strand_cross(true, pos)})),
                        atomize(word_of(P::P111, {strand_cross(false, pos)}))));
            const bool ok = prod.at_minus_one() ==
                            FormalSum::identity(P::P111).at_minus_one();
            add("anchor/split-involution-" + std::to_string(pos), ok,
                "t then d collapses to the identity class at v = -1");
        }
    }

    // Seeded cross-model consistency: each model may stay silent, but no two
    // may disagree on a definite answer.
    const std::size_t n = opt.samples;
    if (n > 0 && (static_cast<int>(opt.rewrite) + static_cast<int>(opt.split) +
                  static_cast<int>(opt.ktheory)) >= 2) {
        std::mt19937 rng(opt.seed);
        const Budget small = detail::sampling_budget();
        std::size_t proved = 0, distinct = 0;
        bool rk_ok = true, sr_ok = true, sk_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            auto [w1, w2] = random_parallel_pair(rng, 6);
            const bool kt_equal =
                !opt.ktheory || evaluate_word(w1).matrix == evaluate_word(w2).matrix;
            const bool rw_proved =
                opt.rewrite && equal(w1, w2, small).status == EqStatus::ProvedEqual;
            const SplitVerdict sv =
                opt.split ? split_equal(w1, w2) : SplitVerdict::EqualAtMinusOne;
            proved += rw_proved ? 1 : 0;
            distinct += sv == SplitVerdict::Distinct ? 1 : 0;
            if (opt.rewrite && opt.ktheory && rw_proved && !kt_equal) rk_ok = false;
            if (opt.rewrite && opt.split && rw_proved && sv == SplitVerdict::Distinct)
                sr_ok = false;
            if (opt.split && opt.ktheory && sv == SplitVerdict::Distinct && kt_equal)
                sk_ok = false;
        }
        const std::string tally = std::to_string(n) + " pairs, " + std::to_string(proved) +
                                  " proved, " + std::to_string(distinct) + " refuted";
        if (opt.rewrite && opt.ktheory)
            add("cross/rewrite-vs-ktheory", rk_ok, tally);
        if (opt.rewrite && opt.split)
            add("cross/rewrite-vs-split", sr_ok, tally);
        if (opt.split && opt.ktheory)
            add("cross/split-vs-ktheory", sk_ok, tally);
    }

    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
    return out;
}

// The representation-focused slice: matrix checks for every relation plus
// the identity suite and the split cross-examination.
inline std::vector<CheckResult> verify_representation() {
    VerifyOptions opt;
    opt.rewrite = false;
    return run_checks(opt);
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

}  // namespace gbr
