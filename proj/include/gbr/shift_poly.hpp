#pragma once

#include <cstdint>
#include <map>

namespace gbr {

// Laurent polynomial in the shift variable v with integer coefficients.
// v^k records a homological shift of [-k], so the shift functor [m]
// contributes v^{-m}; evaluating at v = -1 recovers signed Euler classes.
class ShiftPoly {
public:
    ShiftPoly() = default;

    explicit ShiftPoly(long long c, int exponent = 0) {
        if (c != 0) coeff_[exponent] = c;
    }

    // The class of the shift functor [m].
    static ShiftPoly shift(int m) { return ShiftPoly(1, -m); }

    static ShiftPoly one() { return ShiftPoly(1); }

    bool is_zero() const { return coeff_.empty(); }

    const std::map<int, long long>& coefficients() const { return coeff_; }

    long long at(int exponent) const {
        auto it = coeff_.find(exponent);
        return it == coeff_.end() ? 0 : it->second;
    }

    ShiftPoly& operator+=(const ShiftPoly& o) {
        for (const auto& [e, c] : o.coeff_) {
            long long& slot = coeff_[e];
            slot += c;
            if (slot == 0) coeff_.erase(e);
        }
        return *this;
    }

    ShiftPoly& operator-=(const ShiftPoly& o) { return *this += -o; }

    friend ShiftPoly operator+(ShiftPoly a, const ShiftPoly& b) { return a += b; }
    friend ShiftPoly operator-(ShiftPoly a, const ShiftPoly& b) { return a -= b; }

    friend ShiftPoly operator-(const ShiftPoly& a) {
        ShiftPoly out;
        for (const auto& [e, c] : a.coeff_) out.coeff_[e] = -c;
        return out;
    }

    friend ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b) {
        ShiftPoly out;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) {
                long long& slot = out.coeff_[ea + eb];
                slot += ca * cb;
                if (slot == 0) out.coeff_.erase(ea + eb);
            }
        return out;
    }

    long long evaluate_minus_one() const {
        long long total = 0;
        for (const auto& [e, c] : coeff_) total += (e % 2 != 0) ? -c : c;
        return total;
    }

    friend bool operator==(const ShiftPoly&, const ShiftPoly&) = default;

private:
    std::map<int, long long> coeff_;
};

}  // namespace gbr
