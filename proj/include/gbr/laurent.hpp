#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>

namespace gbr {

// Integer Laurent polynomials in x1, x2, x3, the classes of the tautological
// line, its quotient successor, and the residual line on the full flag
// variety. The relation x1*x2*x3 = 1 is not imposed here; the basis
// reduction (kbasis.hpp) eliminates x3 through it.
class Laurent {
public:
    using Exps = std::array<int, 3>;

    Laurent() = default;

    static Laurent constant(long long c) {
        Laurent out;
        if (c != 0) out.c_[{0, 0, 0}] = c;
        return out;
    }

    static Laurent one() { return constant(1); }

    static Laurent monomial(int a, int b, int c, long long coeff = 1) {
        Laurent out;
        if (coeff != 0) out.c_[{a, b, c}] = coeff;
        return out;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Exps, long long>& terms() const { return c_; }

    long long coefficient(const Exps& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }

    void add_term(const Exps& e, long long coeff) {
        if (coeff == 0) return;
        long long& slot = c_[e];
        slot += coeff;
        if (slot == 0) c_.erase(e);
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator-(const Laurent& a) {
        Laurent out;
        for (const auto& [e, c] : a.c_) out.c_[e] = -c;
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }

    // The variable swap s_i exchanging x_i and x_{i+1}, i in {1, 2}.
    Laurent swapped(int i) const {
        Laurent out;
        for (const auto& [e, c] : c_) {
            Exps k = e;
            std::swap(k[i - 1], k[i]);
            out.c_[k] = c;
        }
        return out;
    }

    friend bool operator==(const Laurent&, const Laurent&) = default;

private:
    std::map<Exps, long long> c_;
};

// One-variable integer Laurent polynomials, for the projective-plane side.
class Laurent1 {
public:
    Laurent1() = default;

    static Laurent1 monomial(int e, long long coeff = 1) {
        Laurent1 out;
        if (coeff != 0) out.c_[e] = coeff;
        return out;
    }

    static Laurent1 one() { return monomial(0); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, long long>& terms() const { return c_; }

    void add_term(int e, long long coeff) {
        if (coeff == 0) return;
        long long& slot = c_[e];
        slot += coeff;
        if (slot == 0) c_.erase(e);
    }

    Laurent1& operator+=(const Laurent1& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }

    friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }

    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
        Laurent1 out;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const Laurent1&, const Laurent1&) = default;

private:
    std::map<int, long long> c_;
};

// Embeds a one-variable class into the flag ring, sending the variable to
// the given monomial (x1 for the plane of lines, x1*x2 for the dual plane).
inline Laurent embed(const Laurent1& f, const Laurent::Exps& image) {
    Laurent out;
    for (const auto& [e, c] : f.terms())
        out.add_term({image[0] * e, image[1] * e, image[2] * e}, c);
    return out;
}

}  // namespace gbr
