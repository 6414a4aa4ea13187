#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "gbr/parse.hpp"
#include "gbr/reflect.hpp"
#include "gbr/relations.hpp"
#include "gbr/rewrite.hpp"
#include "gbr/sampling.hpp"

using namespace gbr;

TEST_CASE("apply_relation") {
    const std::size_t braid = *relation_index("braid");
    const Word lhs = parse_word("t[111,1] ; t[111,2] ; t[111,1]");
    const Word rhs = parse_word("t[111,2] ; t[111,1] ; t[111,2]");

    SECTION("forward at a matching position rewrites") {
        const auto out = apply_relation(lhs, braid, true, 0);
        REQUIRE(out.has_value());
        REQUIRE(*out == rhs);
    }

    SECTION("no match, no result") {
        REQUIRE_FALSE(apply_relation(lhs, braid, true, 1).has_value());
        REQUIRE_FALSE(apply_relation(lhs, *relation_index("multifork"), true, 0)
                          .has_value());
    }

    SECTION("identity sides insert material") {
        const Word id12 = parse_word("id[12]");
        const auto out =
            apply_relation(id12, *relation_index("inverse-mixed-12"), false, 0);
        REQUIRE(out.has_value());
        REQUIRE(render(*out) == "d[12>21] ; t[21>12]");
    }

    SECTION("a rewrite inside a longer word keeps the flanks") {
        const Word padded = parse_word("f[12>111] ; t[111,1] ; t[111,2] ; t[111,1]");
        const auto out = apply_relation(padded, braid, true, 1);
        REQUIRE(out.has_value());
        REQUIRE(render(*out) == "f[12>111] ; t[111,2] ; t[111,1] ; t[111,2]");
    }
}

TEST_CASE("rewrite_step") {
    SECTION("the triple strand identity has no outgoing rewrites") {
        REQUIRE(rewrite_step(Word(Partition::P3)).empty());
    }

    SECTION("the thin identity word gains inverse pairs by insertion") {
        const auto next = rewrite_step(Word(Partition::P111));
        REQUIRE_FALSE(next.empty());
        bool found = false;
        for (const Word& w : next)
            if (render(w) == "t[111,1] ; d[111,1]") found = true;
        REQUIRE(found);
    }

    SECTION("results are sorted and deduplicated") {
        const auto next = rewrite_step(parse_word("t[111,1] ; t[111,2] ; t[111,1]"));
        REQUIRE(std::is_sorted(next.begin(), next.end()));
        REQUIRE(std::adjacent_find(next.begin(), next.end()) == next.end());
    }
}

TEST_CASE("equality search") {
    SECTION("every defining relation is proved in one step") {
        for (const Relation& r : relation_closure()) {
            INFO(r.name);
            const EqualityVerdict v = equal(r.lhs, r.rhs);
            REQUIRE(v.status == EqStatus::ProvedEqual);
            REQUIRE(v.witness.size() == 1);
            REQUIRE(relation_closure()[v.witness[0].relation].name == r.name);
        }
    }

    SECTION("a word equals itself with an empty witness") {
        const Word w = parse_word("f[3>12] ; f[12>111]");
        const EqualityVerdict v = equal(w, w);
        REQUIRE(v.status == EqStatus::ProvedEqual);
        REQUIRE(v.witness.empty());
        REQUIRE(v.states_explored == 1);
    }

    SECTION("witnesses replay") {
        const Word lhs = parse_word("t[21>12] ; f[12>111] ; g[111>12]");
        const Word rhs = parse_word("f[21>111] ; t[111,2] ; t[111,1] ; g[111>12]");
        const EqualityVerdict v = equal(lhs, rhs);
        REQUIRE(v.status == EqStatus::ProvedEqual);
        REQUIRE(replay_witness(lhs, v.witness) == rhs);
    }

    SECTION("mismatched endpoints are an error, not a verdict") {
        REQUIRE_THROWS_AS(equal(parse_word("f[3>12]"), parse_word("f[3>21]")),
                          EndpointMismatch);
    }

    SECTION("the two mixed crossings stay apart") {
        const EqualityVerdict v =
            equal(parse_word("t[12>21]"), parse_word("d[12>21]"), Budget{5000, 10});
        REQUIRE(v.status == EqStatus::Unknown);
    }

    SECTION("a tiny budget reports Unknown instead of lying") {
        const EqualityVerdict v = equal(parse_word("d[12>21] ; t[21>12]"),
                                        parse_word("id[12]"), Budget{2, 16});
        REQUIRE(v.status == EqStatus::Unknown);
        REQUIRE(v.states_explored <= 2);
    }

    SECTION("proofs compose across several relations") {
        // multifork then pitchfork territory: needs an actual search.
        const Word lhs = parse_word("f[3>21] ; f[21>111] ; g[111>21] ; g[21>3]");
        const Word rhs = parse_word("f[3>12] ; f[12>111] ; g[111>12] ; g[12>3]");
        const EqualityVerdict v = equal(lhs, rhs);
        REQUIRE(v.status == EqStatus::ProvedEqual);
        REQUIRE(v.witness.size() >= 2);
        REQUIRE(replay_witness(lhs, v.witness) == rhs);
    }
}

TEST_CASE("equality is a congruence on proved pairs") {
    std::mt19937 rng(23);
    int proved = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto [w1, w2] = random_parallel_pair(rng, 4);
        const Budget small{3000, 9};
        if (equal(w1, w2, small).status != EqStatus::ProvedEqual) continue;
        ++proved;

        // Compose both sides with the same extra step; equality must survive.
        const auto& options = outgoing(w1.target());
        const Generator ext = options[rng() % options.size()];
        Word e1 = w1, e2 = w2;
        e1.append(ext);
        e2.append(ext);
        REQUIRE(equal(e1, e2, Budget{20000, 12}).status == EqStatus::ProvedEqual);

        // Reflections send provable pairs to provable pairs.
        for (Axis ax : all_axes)
            REQUIRE(equal(reflect(w1, ax), reflect(w2, ax), Budget{20000, 12}).status ==
                    EqStatus::ProvedEqual);
    }
    REQUIRE(proved >= 10);  // the sample actually exercised the property
}

TEST_CASE("determinism") {
    const Word lhs = parse_word("t[21>12] ; f[12>111]");
    const Word rhs = parse_word("f[21>111] ; t[111,2] ; t[111,1]");
    const EqualityVerdict a = equal(lhs, rhs);
    const EqualityVerdict b = equal(lhs, rhs);
    REQUIRE(a.status == b.status);
    REQUIRE(a.states_explored == b.states_explored);
    REQUIRE(a.witness == b.witness);
}

TEST_CASE("normalize") {
    SECTION("golden forms") {
        const Budget small{8000, 8};
        REQUIRE(render(normalize(parse_word("f[3>21] ; f[21>111]"), small)) ==
                "f[3>12] ; f[12>111]");
        REQUIRE(render(normalize(parse_word("t[111,1] ; d[111,1]"), small)) ==
                "id[111]");
        REQUIRE(render(normalize(parse_word("id[3]"), small)) == "id[3]");
    }

    SECTION("idempotent") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            const Word w = random_word(rng, all_partitions[rng() % 4], rng() % 5);
            const Budget budget{20000, 10};
            const Word n = normalize(w, budget);
            REQUIRE(normalize(n, budget) == n);
            REQUIRE(!(w < n));  // never larger than the input
        }
    }

    SECTION("normal forms of provably equal words agree") {
        for (const Relation& r : relation_closure()) {
            INFO(r.name);
            const Budget budget{50000, 10};
            REQUIRE(normalize(r.lhs, budget) == normalize(r.rhs, budget));
        }
    }
}

TEST_CASE("enumerate_classes") {
    SECTION("the two fork routes from 3 to 111 form one class") {
        const auto classes = enumerate_classes(Partition::P3, Partition::P111, 2);
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].size() == 2);
        REQUIRE(render(classes[0][0]) == "f[3>12] ; f[12>111]");
        REQUIRE(render(classes[0][1]) == "f[3>21] ; f[21>111]");
    }

    SECTION("only the identity lives at length zero") {
        const auto classes = enumerate_classes(Partition::P3, Partition::P3, 0);
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].size() == 1);
        REQUIRE(classes[0][0].is_identity());
    }

    SECTION("the two mixed crossings give two length-one classes") {
        const auto classes = enumerate_classes(Partition::P12, Partition::P21, 1);
        REQUIRE(classes.size() == 2);
        REQUIRE(render(classes[0][0]) == "t[12>21]");
        REQUIRE(render(classes[1][0]) == "d[12>21]");
    }

    SECTION("representatives are the least members, classes sorted") {
        const auto classes = enumerate_classes(Partition::P12, Partition::P12, 2);
        REQUIRE_FALSE(classes.empty());
        // id[12] sorts below everything, so it fronts the first class.
        REQUIRE(classes[0][0].is_identity());
        for (const auto& cls : classes) {
            REQUIRE(std::is_sorted(cls.begin(), cls.end()));
            for (const Word& w : cls) {
                REQUIRE(w.source() == Partition::P12);
                REQUIRE(w.target() == Partition::P12);
            }
        }
        for (std::size_t i = 1; i < classes.size(); ++i)
            REQUIRE(classes[i - 1][0] < classes[i][0]);
        REQUIRE(enumerate(Partition::P12, Partition::P12, 2).size() == classes.size());
    }

    SECTION("members of one class are pairwise provably equal") {
        const auto classes = enumerate_classes(Partition::P111, Partition::P12, 2);
        for (const auto& cls : classes)
            for (std::size_t i = 1; i < cls.size(); ++i)
                REQUIRE(equal(cls[0], cls[i]).status == EqStatus::ProvedEqual);
    }
}
