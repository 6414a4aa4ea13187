#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gbr/errors.hpp"
#include "gbr/generator.hpp"
#include "gbr/partition.hpp"

namespace gbr {

// A composable word of generators, stored in diagram order: steps[0] is
// applied first, reading the source object toward the target. Identity steps
// are erased on construction, so two words compare equal exactly when their
// normalized step lists agree.
class Word {
public:
    explicit Word(Partition source) : source_(source) {}

    Word(Partition source, std::vector<Generator> steps) : source_(source) {
        steps_.reserve(steps.size());
        for (const Generator& g : steps) append(g);
    }

    Partition source() const { return source_; }

    Partition target() const {
        return steps_.empty() ? source_ : steps_.back().target;
    }

    const std::vector<Generator>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool is_identity() const { return steps_.empty(); }

    // Appends one generator, checking composability. Identity generators
    // vanish (after the endpoint check).
    Word& append(const Generator& g) {
        if (!is_legal(g))
            throw IllegalGenerator(steps_.size(), "illegal generator " + to_token(g));
        if (g.source != target())
            throw EndpointMismatch(std::string(to_string(target())),
                                   std::string(to_string(g.source)));
        if (g.kind != GenKind::Identity) steps_.push_back(g);
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;

    // Pinned total order: shorter first, then steps lexicographically by the
    // token order, then source (which only matters for identity words).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.steps_.size() <=> b.steps_.size(); c != 0) return c;
        if (auto c = a.steps_ <=> b.steps_; c != 0) return c;
        return a.source_ <=> b.source_;
    }

private:
    Partition source_;
    std::vector<Generator> steps_;
};

inline Word compose(const Word& a, const Word& b) {
    if (a.target() != b.source())
        throw EndpointMismatch(std::string(to_string(a.target())),
                               std::string(to_string(b.source())));
    Word out = a;
    for (const Generator& g : b.steps()) out.append(g);
    return out;
}

// The object sitting at chain position pos: the source for pos = 0, the
// target of step pos-1 otherwise. Valid for 0 <= pos <= size().
inline Partition object_at(const Word& w, std::size_t pos) {
    return pos == 0 ? w.source() : w.steps()[pos - 1].target;
}

inline Word word_of(Partition source, std::initializer_list<Generator> steps) {
    return Word(source, std::vector<Generator>(steps));
}

}  // namespace gbr
