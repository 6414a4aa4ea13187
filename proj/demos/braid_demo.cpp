// Walks through the word calculus: parsing, rewriting, and the
// equality search.  Run it with no arguments.

#include <gbr/parse.hpp>
#include <gbr/relations.hpp>
#include <gbr/rewrite.hpp>
#include <gbr/split.hpp>

#include <iostream>

using namespace gbr;

int main() {
    std::cout << "-- parsing ----------------------------------------\n";
    const Word pitchfork = parse_word("t[21>12] ; f[12>111]");
    std::cout << "word:   " << render(pitchfork) << "\n";
    std::cout << "source: " << to_string(pitchfork.source()) << ", target: "
              << to_string(pitchfork.target()) << "\n\n";

    std::cout << "-- defining relations -----------------------------\n";
    for (const Relation& rel : base_relations())
        std::cout << "  " << rel.name << ": " << render(rel.lhs)
                  << "  ==  " << render(rel.rhs) << "\n";
    std::cout << "closure under the three reflections has "
              << relation_closure().size() << " relations\n\n";

    std::cout << "-- normal forms -----------------------------------\n";
    const Budget small{8000, 8};
    const Word multifork = parse_word("f[3>21] ; f[21>111]");
    std::cout << render(multifork) << "  ~>  "
              << render(normalize(multifork, small)) << "\n";
    const Word untwist = parse_word("t[111,1] ; d[111,1]");
    std::cout << render(untwist) << "  ~>  "
              << render(normalize(untwist, small)) << "\n\n";

    std::cout << "-- equality search --------------------------------\n";
    const Word lhs = parse_word("f[3>21] ; f[21>111] ; g[111>21] ; g[21>3]");
    const Word rhs = parse_word("f[3>12] ; f[12>111] ; g[111>12] ; g[12>3]");
    const EqualityVerdict verdict = equal(lhs, rhs);
    std::cout << render(lhs) << "\n  vs\n" << render(rhs) << "\n";
    if (verdict.status == EqStatus::ProvedEqual) {
        std::cout << "proved equal after exploring " << verdict.states_explored
                  << " words; rewrite trace:\n";
        Word w = lhs;
        for (const WitnessStep& step : verdict.witness) {
            w = *apply_relation(w, step.relation, step.forward, step.position);
            std::cout << "  --[" << relation_closure()[step.relation].name
                      << "]-->  " << render(w) << "\n";
        }
    }
    std::cout << "\n";

    std::cout << "-- where rewriting gives up -----------------------\n";
    const Word t = parse_word("t[12>21]");
    const Word d = parse_word("d[12>21]");
    const EqualityVerdict stuck = equal(t, d, Budget{20000, 10});
    std::cout << render(t) << "  vs  " << render(d) << ": "
              << (stuck.status == EqStatus::Unknown ? "unknown" : "decided")
              << " after " << stuck.states_explored << " words\n";
    std::cout << "the splitting model settles it: ";
    switch (split_equal(t, d)) {
        case SplitVerdict::EqualGenericV:   std::cout << "equal for generic v\n"; break;
        case SplitVerdict::EqualAtMinusOne: std::cout << "equal at v = -1\n"; break;
        case SplitVerdict::Distinct:        std::cout << "distinct\n"; break;
    }
    std::cout << "\n";

    std::cout << "-- small hom-set census ---------------------------\n";
    const auto classes =
        enumerate_classes(Partition::P12, Partition::P21, 2, Budget{4000, 8});
    std::cout << "words (1,2) -> (2,1) of length <= 2, grouped by provable "
                 "equality:\n";
    for (const auto& cls : classes)
        std::cout << "  [" << cls.size() << "] " << render(cls.front()) << "\n";
    return 0;
}
