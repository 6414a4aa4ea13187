#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gbr/demazure.hpp"
#include "gbr/errors.hpp"
#include "gbr/laurent.hpp"
#include "gbr/partition.hpp"

namespace gbr {

// The four Grothendieck groups the generators act on, modeled on the compact
// cores: a point, the plane of lines, the dual plane, and the full flag
// variety. Ranks 1, 3, 3, 6.
enum class KBasis { Kpt, KP2, KP2dual, KFl3 };

constexpr KBasis module_of(Partition p) {
    switch (p) {
        case Partition::P3: return KBasis::Kpt;
        case Partition::P12: return KBasis::KP2;
        case Partition::P21: return KBasis::KP2dual;
        case Partition::P111: return KBasis::KFl3;
    }
    return KBasis::Kpt;
}

constexpr int rank_of(KBasis m) {
    switch (m) {
        case KBasis::Kpt: return 1;
        case KBasis::KP2:
        case KBasis::KP2dual: return 3;
        case KBasis::KFl3: return 6;
    }
    return 0;
}

constexpr int k_rank(Partition p) { return rank_of(module_of(p)); }

using Vec = std::vector<long long>;

// Basis monomials of KFl3: x1^a x2^b with 0 <= a <= 2, 0 <= b <= 1, in the
// order 1, x1, x1^2, x2, x1 x2, x1^2 x2. x3 is eliminated via x1 x2 x3 = 1,
// and each variable satisfies (1 - x)^3 = 0 because e1 = e2 = 3, e3 = 1.
inline const std::vector<Laurent>& kfl3_basis() {
    static const std::vector<Laurent> basis = [] {
        std::vector<Laurent> b;
        for (int bexp = 0; bexp <= 1; ++bexp)
            for (int aexp = 0; aexp <= 2; ++aexp) b.push_back(Laurent::monomial(aexp, bexp, 0));
        return b;
    }();
    return basis;
}

// Coordinates of a flag-ring class in the monomial basis above. Reduction is
// by term rewriting: x3 powers become inverse x1 x2 powers, negative or high
// powers of x1 fold through x^3 = 3x^2 - 3x + 1, and x2^2 falls back on the
// e-symmetric relations. The x2-degree strictly drops under the last rule,
// so the sweep terminates.
inline Vec reduce_fl3(const Laurent& f) {
    std::vector<std::tuple<int, int, long long>> work;
    for (const auto& [e, c] : f.terms()) work.emplace_back(e[0] - e[2], e[1] - e[2], c);
    std::map<std::pair<int, int>, long long> acc;
    std::size_t safety = 0;
    while (!work.empty()) {
        auto [a, b, c] = work.back();
        work.pop_back();
        if (c == 0) continue;
        if (++safety > 40'000'000)
            throw std::logic_error("flag-basis reduction failed to terminate");
        if (a < 0) {
            work.emplace_back(a + 3, b, c);
            work.emplace_back(a + 2, b, -3 * c);
            work.emplace_back(a + 1, b, 3 * c);
        } else if (a >= 3) {
            work.emplace_back(a - 1, b, 3 * c);
            work.emplace_back(a - 2, b, -3 * c);
            work.emplace_back(a - 3, b, c);
        } else if (b < 0) {
            work.emplace_back(a, b + 3, c);
            work.emplace_back(a, b + 2, -3 * c);
            work.emplace_back(a, b + 1, 3 * c);
        } else if (b >= 2) {
            // x2^2 = -x1^2 - x1 x2 + 3 x1 + 3 x2 - 3
            work.emplace_back(a + 2, b - 2, -c);
            work.emplace_back(a + 1, b - 1, -c);
            work.emplace_back(a + 1, b - 2, 3 * c);
            work.emplace_back(a, b - 1, 3 * c);
            work.emplace_back(a, b - 2, -3 * c);
        } else {
            acc[{a, b}] += c;
        }
    }
    Vec out(6, 0);
    for (const auto& [ab, c] : acc) out[static_cast<std::size_t>(3 * ab.second + ab.first)] = c;
    return out;
}

// Coordinates in the basis {1, x, x^2} of K of the projective plane, where
// (1 - x)^3 = 0.
inline Vec reduce_p2(const Laurent1& f) {
    std::vector<std::pair<int, long long>> work(f.terms().begin(), f.terms().end());
    Vec out(3, 0);
    while (!work.empty()) {
        auto [e, c] = work.back();
        work.pop_back();
        if (c == 0) continue;
        if (e < 0) {
            work.emplace_back(e + 3, c);
            work.emplace_back(e + 2, -3 * c);
            work.emplace_back(e + 1, 3 * c);
        } else if (e >= 3) {
            work.emplace_back(e - 1, 3 * c);
            work.emplace_back(e - 2, -3 * c);
            work.emplace_back(e - 3, c);
        } else {
            out[static_cast<std::size_t>(e)] += c;
        }
    }
    return out;
}

// Pushforward to the point through the full flag: the composite Demazure
// operator pi1 pi2 pi1 lands in the symmetric classes, which the ideal
// collapses to integers. Anything else is a broken convention.
inline long long chi_fl3(const Laurent& f) {
    const Vec v = reduce_fl3(demazure(1, demazure(2, demazure(1, f))));
    for (std::size_t i = 1; i < 6; ++i)
        if (v[i] != 0) throw ConventionError("flag pushforward did not reduce to a constant");
    return v[0];
}

// Euler characteristic on the plane of lines (variable goes to x1) and the
// dual plane (variable goes to x1 x2).
inline long long chi_p2(const Laurent1& f) { return chi_fl3(embed(f, {1, 0, 0})); }
inline long long chi_p2_dual(const Laurent1& f) { return chi_fl3(embed(f, {1, 1, 0})); }

// Integer determinant by fraction-free elimination.
inline long long bareiss_det(std::vector<Vec> m) {
    const std::size_t n = m.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Grothendieck-polynomial basis via the Demazure recursion from the top
// class, coordinates row per Weyl group element in the order
// e, s1, s2, s1s2, s2s1, w0. The determinant over the monomial basis must
// be a unit; its value is pinned as a regression constant in the tests.
inline std::vector<Vec> grothendieck_coordinates() {
    const Laurent x1inv = Laurent::monomial(-1, 0, 0);
    const Laurent x2inv = Laurent::monomial(0, -1, 0);
    const Laurent a = Laurent::one() - x1inv;
    const Laurent w0 = a * a * (Laurent::one() - x2inv);
    const Laurent s1s2 = demazure(1, w0);
    const Laurent s2s1 = demazure(2, w0);
    const Laurent s2 = demazure(2, s1s2);
    const Laurent s1 = demazure(1, s2s1);
    const Laurent e = demazure(1, s2);
    return {reduce_fl3(e),    reduce_fl3(s1),   reduce_fl3(s2),
            reduce_fl3(s1s2), reduce_fl3(s2s1), reduce_fl3(w0)};
}

// Build-time certificate that both chosen bases are unimodular against their
// Demazure/Grothendieck counterparts.
inline void check_basis_unimodular() {
    const long long det6 = bareiss_det(grothendieck_coordinates());
    if (det6 != 1 && det6 != -1)
        throw ConventionError("flag basis change is not unimodular: det " + std::to_string(det6));
    // On the plane, the Grothendieck basis is {1, 1-x, (1-x)^2}.
    std::vector<Vec> p2;
    p2.push_back(reduce_p2(Laurent1::one()));
    Laurent1 omx = Laurent1::one() + Laurent1::monomial(1, -1);
    p2.push_back(reduce_p2(omx));
    p2.push_back(reduce_p2(omx * omx));
    const long long det3 = bareiss_det(p2);
    if (det3 != 1 && det3 != -1)
        throw ConventionError("plane basis change is not unimodular: det " +
                              std::to_string(det3));
}

}  // namespace gbr
