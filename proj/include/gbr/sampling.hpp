#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "gbr/generator.hpp"
#include "gbr/word.hpp"

namespace gbr {

// Seeded word sampling for property checks. Draws go through modulo
// reduction rather than a distribution object, so the stream is identical
// across standard libraries; the tiny bias is irrelevant here.

inline const std::vector<Generator>& outgoing(Partition p) {
    static const std::vector<std::vector<Generator>> table = [] {
        std::vector<std::vector<Generator>> out(4);
        for (const Generator& g : legal_generators())
            if (g.kind != GenKind::Identity)
                out[static_cast<std::size_t>(g.source)].push_back(g);
        return out;
    }();
    return table[static_cast<std::size_t>(p)];
}

inline Word random_word(std::mt19937& rng, Partition source, std::size_t len) {
    Word w(source);
    for (std::size_t i = 0; i < len; ++i) {
        const auto& options = outgoing(w.target());
        w.append(options[rng() % options.size()]);
    }
    return w;
}

// A parallel pair: same source, same target, independent lengths up to
// max_len. Resamples the second word until the targets agree, which takes a
// handful of tries at most since there are only four objects.
inline std::pair<Word, Word> random_parallel_pair(std::mt19937& rng, std::size_t max_len) {
    const Partition src = all_partitions[rng() % all_partitions.size()];
    const Word w1 = random_word(rng, src, rng() % (max_len + 1));
    for (;;) {
        Word w2 = random_word(rng, src, rng() % (max_len + 1));
        if (w2.target() == w1.target()) return {w1, std::move(w2)};
    }
}

}  // namespace gbr
