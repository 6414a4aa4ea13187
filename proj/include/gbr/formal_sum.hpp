#pragma once

#include <map>
#include <utility>

#include "gbr/errors.hpp"
#include "gbr/shift_poly.hpp"
#include "gbr/word.hpp"

namespace gbr {

// A finite formal sum of fork/merge atoms with ShiftPoly coefficients, all
// sharing one pair of endpoints. Atom words use Merge letters to denote
// right adjoints, so they carry no shift of their own; shifts live entirely
// in the coefficients.
//
// cone_tainted records derivation history, not value: it is set when any
// cone-derived substitution contributed, in which case the sum is only
// trusted after evaluation at v = -1. Equality comparison ignores it.
class FormalSum {
public:
    FormalSum(Partition source, Partition target) : source_(source), target_(target) {}

    static FormalSum identity(Partition obj) {
        FormalSum s(obj, obj);
        s.add_term(Word(obj), ShiftPoly::one());
        return s;
    }

    Partition source() const { return source_; }
    Partition target() const { return target_; }
    const std::map<Word, ShiftPoly>& terms() const { return terms_; }

    bool cone_tainted() const { return cone_tainted_; }
    void mark_cone_tainted() { cone_tainted_ = true; }

    void add_term(const Word& atom, const ShiftPoly& c) {
        if (atom.source() != source_ || atom.target() != target_)
            throw EndpointMismatch(
                std::string(to_string(source_)) + ">" + std::string(to_string(target_)),
                std::string(to_string(atom.source())) + ">" + std::string(to_string(atom.target())));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(atom, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        if (o.source_ != source_ || o.target_ != target_)
            throw EndpointMismatch(
                std::string(to_string(source_)) + ">" + std::string(to_string(target_)),
                std::string(to_string(o.source_)) + ">" + std::string(to_string(o.target_)));
        for (const auto& [atom, c] : o.terms_) add_term(atom, c);
        cone_tainted_ = cone_tainted_ || o.cone_tainted_;
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

    FormalSum scaled(const ShiftPoly& c) const {
        FormalSum out(source_, target_);
        out.cone_tainted_ = cone_tainted_;
        for (const auto& [atom, p] : terms_) out.add_term(atom, p * c);
        return out;
    }

    // Integer Euler coefficients after setting v = -1; zero entries pruned.
    std::map<Word, long long> at_minus_one() const {
        std::map<Word, long long> out;
        for (const auto& [atom, p] : terms_)
            if (long long c = p.evaluate_minus_one(); c != 0) out.emplace(atom, c);
        return out;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
    }

private:
    Partition source_;
    Partition target_;
    std::map<Word, ShiftPoly> terms_;
    bool cone_tainted_ = false;
};

// Bilinear composition: atom words concatenate in diagram order.
inline FormalSum compose(const FormalSum& a, const FormalSum& b) {
    if (a.target() != b.source())
        throw EndpointMismatch(std::string(to_string(a.target())),
                               std::string(to_string(b.source())));
    FormalSum out(a.source(), b.target());
    if (a.cone_tainted() || b.cone_tainted()) out.mark_cone_tainted();
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            for (const Generator& g : wb.steps()) w.append(g);
            out.add_term(w, ca * cb);
        }
    return out;
}

}  // namespace gbr
