#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gbr/relations.hpp"
#include "gbr/word.hpp"

namespace gbr {

// Search limits for the congruence search. max_states bounds the number of
// distinct words visited across both search trees, max_len prunes words that
// grow past that many steps.
struct Budget {
    std::size_t max_states = 200000;
    std::size_t max_len = 16;
};

enum class EqStatus { ProvedEqual, Unknown };

// One rewrite in a proof: apply relation_closure()[relation], reading lhs to
// rhs when forward, at the given step offset.
struct WitnessStep {
    std::size_t relation;
    std::size_t position;
    bool forward;

    friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

struct EqualityVerdict {
    EqStatus status = EqStatus::Unknown;
    // Present (possibly empty) exactly when status is ProvedEqual; replaying
    // it from the left word yields the right word.
    std::vector<WitnessStep> witness;
    std::size_t states_explored = 0;
};

// Applies one side of a relation at a fixed position, or nullopt when the
// pattern does not sit there. A relation side with no steps matches any
// position whose local object agrees, which is how identity relations insert
// material into a word.
inline std::optional<Word> apply_relation(const Word& w, std::size_t relation, bool forward,
                                          std::size_t position) {
    const Relation& rel = relation_closure()[relation];
    const Word& pattern = forward ? rel.lhs : rel.rhs;
    const Word& replacement = forward ? rel.rhs : rel.lhs;
    const std::size_t k = pattern.size();
    if (position + k > w.size()) return std::nullopt;
    if (object_at(w, position) != pattern.source()) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j)
        if (!(w.steps()[position + j] == pattern.steps()[j])) return std::nullopt;
    Word out(w.source());
    for (std::size_t j = 0; j < position; ++j) out.append(w.steps()[j]);
    for (const Generator& g : replacement.steps()) out.append(g);
    for (std::size_t j = position + k; j < w.size(); ++j) out.append(w.steps()[j]);
    return out;
}

// All words one relation application away from w, sorted and deduplicated,
// never containing w itself.
inline std::vector<Word> rewrite_step(const Word& w) {
    std::vector<Word> out;
    const std::size_t nrel = relation_closure().size();
    for (std::size_t i = 0; i < nrel; ++i) {
        for (bool forward : {true, false}) {
            for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                if (auto next = apply_relation(w, i, forward, pos); next && !(*next == w))
                    out.push_back(std::move(*next));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Replays a witness from w, throwing if any step fails to apply. Returns the
// final word so callers can check it against the intended right-hand side.
inline Word replay_witness(const Word& w, const std::vector<WitnessStep>& witness) {
    Word cur = w;
    for (const WitnessStep& step : witness) {
        auto next = apply_relation(cur, step.relation, step.forward, step.position);
        if (!next)
            throw std::logic_error("witness step does not apply at position " +
                                   std::to_string(step.position));
        cur = std::move(*next);
    }
    return cur;
}

namespace detail {

// Words hash as byte strings: the source object, then one byte per step.
inline std::string word_key(const Word& w) {
    std::string key;
    key.reserve(w.size() + 1);
    key.push_back(static_cast<char>(w.source()));
    for (const Generator& g : w.steps()) key.push_back(static_cast<char>(step_index(g)));
    return key;
}

struct SearchNode {
    Word word;
    std::ptrdiff_t parent = -1;  // index into the same side's node list
    WitnessStep via{};           // rewrite taking parent to this node
};

struct SearchSide {
    std::vector<SearchNode> nodes;
    std::unordered_map<std::string, std::size_t> visited;  // word_key -> node index
    std::vector<std::size_t> frontier;

    explicit SearchSide(const Word& root) {
        nodes.push_back({root, -1, {}});
        visited.emplace(word_key(root), 0);
        frontier.push_back(0);
    }

    // Steps from the root to the node, in application order.
    std::vector<WitnessStep> path_to(std::size_t index) const {
        std::vector<WitnessStep> steps;
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(index); nodes[i].parent >= 0;
             i = nodes[i].parent)
            steps.push_back(nodes[i].via);
        std::reverse(steps.begin(), steps.end());
        return steps;
    }
};

// A step rewriting u to v, read backwards, rewrites v to u at the same
// position with the opposite orientation.
inline WitnessStep inverted(WitnessStep s) {
    s.forward = !s.forward;
    return s;
}

}  // namespace detail

// Decides provable equality by bidirectional breadth-first search over
// rewrite steps. Level-synchronous: each round fully expands the smaller
// frontier, visiting candidates in a fixed order (words sorted, then
// relation index, orientation, position), so verdicts and witnesses are
// deterministic for a given budget. ProvedEqual is exact; Unknown only means
// the budget ran out before the trees met.
inline EqualityVerdict equal(const Word& w1, const Word& w2, const Budget& budget = {}) {
    if (w1.source() != w2.source() || w1.target() != w2.target())
        throw EndpointMismatch(
            std::string(to_string(w1.source())) + ">" + std::string(to_string(w1.target())),
            std::string(to_string(w2.source())) + ">" + std::string(to_string(w2.target())));

    EqualityVerdict verdict;
    verdict.states_explored = 2;
    if (w1 == w2) {
        verdict.status = EqStatus::ProvedEqual;
        verdict.states_explored = 1;
        return verdict;
    }

    detail::SearchSide left(w1), right(w2);
    const std::size_t nrel = relation_closure().size();
    bool out_of_budget = false;

    // The meet point is reached from both roots. The witness runs the left
    // chain forward to the meet, then the right chain backwards (each step
    // inverted) from the meet down to w2.
    auto finish = [&](std::size_t left_node, std::size_t right_node) {
        std::vector<WitnessStep> witness = left.path_to(left_node);
        std::vector<WitnessStep> back = right.path_to(right_node);
        std::reverse(back.begin(), back.end());
        for (auto& s : back) s = detail::inverted(s);
        witness.insert(witness.end(), back.begin(), back.end());
        if (!(replay_witness(w1, witness) == w2))
            throw std::logic_error("internal error: witness replay mismatch");
        verdict.status = EqStatus::ProvedEqual;
        verdict.witness = std::move(witness);
    };

    while (!out_of_budget && (!left.frontier.empty() || !right.frontier.empty())) {
        const bool expand_left =
            right.frontier.empty() ||
            (!left.frontier.empty() && left.frontier.size() <= right.frontier.size());
        detail::SearchSide& side = expand_left ? left : right;
        detail::SearchSide& other = expand_left ? right : left;

        std::vector<std::size_t> frontier = std::move(side.frontier);
        side.frontier.clear();
        std::sort(frontier.begin(), frontier.end(), [&side](std::size_t a, std::size_t b) {
            return side.nodes[a].word < side.nodes[b].word;
        });

        for (std::size_t node_index : frontier) {
            const Word cur = side.nodes[node_index].word;
            for (std::size_t i = 0; i < nrel; ++i) {
                for (bool forward : {true, false}) {
                    for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
                        auto next = apply_relation(cur, i, forward, pos);
                        if (!next || next->size() > budget.max_len) continue;
                        std::string key = detail::word_key(*next);
                        if (side.visited.contains(key)) continue;
                        if (verdict.states_explored >= budget.max_states) {
                            out_of_budget = true;
                            goto level_done;
                        }
                        auto meet = other.visited.find(key);
                        const std::size_t new_index = side.nodes.size();
                        side.nodes.push_back({std::move(*next),
                                              static_cast<std::ptrdiff_t>(node_index),
                                              WitnessStep{i, pos, forward}});
                        side.visited.emplace(std::move(key), new_index);
                        side.frontier.push_back(new_index);
                        ++verdict.states_explored;
                        if (meet != other.visited.end()) {
                            if (expand_left)
                                finish(new_index, meet->second);
                            else
                                finish(meet->second, new_index);
                            return verdict;
                        }
                    }
                }
            }
        }
    level_done:;
    }
    return verdict;
}

// Least provably-equal word found within budget: breadth-first exploration
// from w, keeping the minimum under the pinned word order, iterated until
// the minimum stops improving. Idempotent for a fixed budget, and the result
// is always provably equal to the input.
inline Word normalize(const Word& w, const Budget& budget = {}) {
    Word best = w;
    for (;;) {
        Word least = best;
        std::unordered_map<std::string, bool> visited;
        visited.emplace(detail::word_key(best), true);
        std::vector<Word> frontier{best};
        std::size_t states = 1;
        while (!frontier.empty() && states < budget.max_states) {
            std::sort(frontier.begin(), frontier.end());
            std::vector<Word> next_frontier;
            for (const Word& cur : frontier) {
                for (const Word& next : rewrite_step(cur)) {
                    if (next.size() > budget.max_len) continue;
                    std::string key = detail::word_key(next);
                    if (visited.contains(key)) continue;
                    if (states >= budget.max_states) break;
                    visited.emplace(std::move(key), true);
                    ++states;
                    if (next < least) least = next;
                    next_frontier.push_back(next);
                }
            }
            frontier = std::move(next_frontier);
        }
        if (!(least < best)) return best;
        best = std::move(least);
    }
}

// All legal words src -> tgt with at most max_len steps, grouped into
// provable-equality classes: words are first bucketed by their normal form,
// then buckets whose representatives the search can prove equal are merged.
// Classes and their members are sorted; the representative of a class is its
// first member.
//
// The searches here never visit words more than a few steps longer than the
// enumeration cap. Without that restriction the insertion rewrites (inverse
// pairs going in) make even tiny components explode to the full state
// budget, and grouping a 50-word listing would cost minutes.
inline std::vector<std::vector<Word>> enumerate_classes(Partition src, Partition tgt,
                                                        std::size_t max_len,
                                                        Budget budget = {}) {
    budget.max_len = std::min(budget.max_len, max_len + 4);
    std::vector<Word> all;
    std::vector<Word> stack{Word(src)};
    while (!stack.empty()) {
        Word cur = std::move(stack.back());
        stack.pop_back();
        if (cur.target() == tgt) all.push_back(cur);
        if (cur.size() == max_len) continue;
        for (const Generator& g : legal_generators()) {
            if (g.kind == GenKind::Identity || g.source != cur.target()) continue;
            Word next = cur;
            next.append(g);
            stack.push_back(std::move(next));
        }
    }
    std::sort(all.begin(), all.end());

    std::map<Word, std::vector<Word>> buckets;
    for (const Word& w : all) buckets[normalize(w, budget)].push_back(w);

    std::vector<std::vector<Word>> classes;
    for (auto& [rep, members] : buckets) {
        bool merged = false;
        for (auto& cls : classes) {
            if (equal(cls.front(), rep, budget).status == EqStatus::ProvedEqual) {
                cls.insert(cls.end(), members.begin(), members.end());
                merged = true;
                break;
            }
        }
        if (!merged) classes.push_back(std::move(members));
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

// One representative per equality class, the least member of each.
inline std::vector<Word> enumerate(Partition src, Partition tgt, std::size_t max_len,
                                   const Budget& budget = {}) {
    std::vector<Word> reps;
    for (const auto& cls : enumerate_classes(src, tgt, max_len, budget))
        reps.push_back(cls.front());
    return reps;
}

}  // namespace gbr
