#pragma once

#include <limits>
#include <map>

#include "gbr/errors.hpp"
#include "gbr/laurent.hpp"

namespace gbr {

namespace detail {

// Exact division by (x_a - x_b), variables 0-indexed, by a Horner sweep over
// the x_a-exponent: repeatedly peel the highest layer into the quotient and
// fold it one layer down through x_b. For an exact division the layers
// cancel out no deeper than the numerator's lowest; walking past that floor
// proves a nonzero remainder.
inline Laurent divide_exact(const Laurent& num, int a, int b) {
    if (num.is_zero()) return {};
    std::map<int, Laurent> layers;  // x_a exponent -> coefficient (x_a-free)
    int floor_exp = std::numeric_limits<int>::max();
    for (const auto& [e0, c] : num.terms()) {
        Laurent::Exps e = e0;
        const int ea = e[a];
        floor_exp = ea < floor_exp ? ea : floor_exp;
        e[a] = 0;
        layers[ea].add_term(e, c);
    }
    Laurent quotient;
    const Laurent xb = Laurent::monomial(b == 0 ? 1 : 0, b == 1 ? 1 : 0, b == 2 ? 1 : 0);
    while (!layers.empty()) {
        auto top = std::prev(layers.end());
        const int e = top->first;
        Laurent coeff = std::move(top->second);
        layers.erase(top);
        if (coeff.is_zero()) continue;
        if (e < floor_exp)
            throw InexactDivision("difference-quotient division left a remainder");
        Laurent xa_shift = Laurent::monomial(a == 0 ? e - 1 : 0, a == 1 ? e - 1 : 0,
                                             a == 2 ? e - 1 : 0);
        quotient += coeff * xa_shift;
        layers[e - 1] += coeff * xb;
    }
    return quotient;
}

}  // namespace detail

// The isobaric Demazure operator pi_i f = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1}),
// the K-theoretic shadow of pushing forward and pulling back along the i-th
// projective line bundle of the flag variety. Idempotent, and the identity
// pi1 pi2 pi1 = pi2 pi1 pi2 holds; both are checked in the test suite.
// InexactDivision escaping here signals a bug, never bad user input: the
// numerator is antisymmetric under s_i by construction.
inline Laurent demazure(int i, const Laurent& f) {
    const Laurent xi = Laurent::monomial(i == 1 ? 1 : 0, i == 1 ? 0 : 1, 0);
    const Laurent xi1 = Laurent::monomial(0, i == 1 ? 1 : 0, i == 1 ? 0 : 1);
    const Laurent num = xi * f - xi1 * f.swapped(i);
    return detail::divide_exact(num, i - 1, i);
}

}  // namespace gbr
