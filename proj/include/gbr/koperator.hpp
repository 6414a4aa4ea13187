#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbr/errors.hpp"
#include "gbr/kbasis.hpp"
#include "gbr/word.hpp"

namespace gbr {

// Exact integer matrix, row-major, column convention: source coordinates in,
// target coordinates out.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::logic_error("matrix dimension mismatch");
        Mat out(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const long long xv = x.at(i, k);
                if (xv == 0) continue;
                for (int j = 0; j < y.cols; ++j) out.at(i, j) += xv * y.at(k, j);
            }
        return out;
    }

    friend Mat operator+(Mat x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::logic_error("matrix dimension mismatch");
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }

    friend Mat operator-(Mat x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::logic_error("matrix dimension mismatch");
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
        return x;
    }

    friend Mat operator*(long long s, Mat x) {
        for (auto& v : x.a) v *= s;
        return x;
    }

    bool is_zero() const {
        for (long long v : a)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Mat&, const Mat&) = default;
};

struct KOperator {
    Partition source;
    Partition target;
    Mat matrix;
};

namespace detail {

struct Frac {
    long long n = 0;
    long long d = 1;

    Frac() = default;
    Frac(long long num, long long den = 1) : n(num), d(den) { norm(); }

    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
    }

    friend Frac operator+(const Frac& a, const Frac& b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
    friend Frac operator-(const Frac& a, const Frac& b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
    friend Frac operator*(const Frac& a, const Frac& b) { return {a.n * b.n, a.d * b.d}; }
    friend Frac operator/(const Frac& a, const Frac& b) { return {a.n * b.d, a.d * b.n}; }
    bool zero() const { return n == 0; }
};

// Solves P c = v exactly for a full-column-rank integer P, demanding an
// integer solution; anything else means the pinned convention constants are
// inconsistent with the chosen bases.
inline Vec solve_exact(const Mat& P, const Vec& v) {
    const int rows = P.rows, cols = P.cols;
    std::vector<std::vector<Frac>> m(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        auto& row = m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(cols) + 1);
        for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] = Frac(P.at(i, j));
        row[static_cast<std::size_t>(cols)] = Frac(v[static_cast<std::size_t>(i)]);
    }
    std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
    int next_row = 0;
    for (int col = 0; col < cols && next_row < rows; ++col) {
        int p = next_row;
        while (p < rows && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)].zero())
            ++p;
        if (p == rows) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(next_row)]);
        const Frac inv = Frac(1) / m[static_cast<std::size_t>(next_row)][static_cast<std::size_t>(col)];
        for (auto& x : m[static_cast<std::size_t>(next_row)]) x = x * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == next_row) continue;
            const Frac f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f.zero()) continue;
            for (int j = col; j <= cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    f * m[static_cast<std::size_t>(next_row)][static_cast<std::size_t>(j)];
        }
        pivot_row[static_cast<std::size_t>(col)] = next_row;
        ++next_row;
    }
    for (int i = next_row; i < rows; ++i)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)].zero())
            throw ConventionError("class does not lie in the pullback image");
    Vec c(static_cast<std::size_t>(cols), 0);
    for (int col = 0; col < cols; ++col) {
        const int pr = pivot_row[static_cast<std::size_t>(col)];
        if (pr < 0) throw ConventionError("pullback matrix is column-degenerate");
        const Frac& val = m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(cols)];
        if (val.d != 1) throw ConventionError("pullback coordinates are not integral");
        c[static_cast<std::size_t>(col)] = val.n;
    }
    return c;
}

}  // namespace detail

// The generator matrices at v = -1, assembled once from the ring machinery:
// pullbacks are variable substitutions, fork pushforwards dress the pullback
// with the Koszul class of the conormal line, merges are the adjoint route
// (twist, Demazure pushforward, coordinate solve, parity sign), and
// crossings are the split-model cone classes read as matrices. Every pinned
// convention constant is cross-examined by the battery at the bottom of the
// build; a failure throws ConventionError rather than producing matrices.
struct KTables {
    Mat P12, P21;                    // plain pullbacks to the flag
    Mat F12, F21, R12, R21;          // planes <-> flag
    Mat F3_12, F3_21, R12_3, R21_3;  // point <-> planes
    Mat T1, T2;                      // strand crossings (t and d agree)
    Mat Tm12_21, Tm21_12;            // mixed crossings
    Vec chi6;                        // Euler characteristics of the flag basis

    KTables() {
        check_basis_unimodular();
        const auto& basis = kfl3_basis();

        auto columns6 = [](const std::vector<Vec>& cols) {
            Mat m(6, static_cast<int>(cols.size()));
            for (int j = 0; j < m.cols; ++j)
                for (int i = 0; i < 6; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            return m;
        };

        // Pullbacks: x -> x1 on the 12 side, y -> x1 x2 on the 21 side.
        const Laurent x1 = Laurent::monomial(1, 0, 0);
        const Laurent x1x2 = Laurent::monomial(1, 1, 0);
        P12 = columns6({reduce_fl3(Laurent::one()), reduce_fl3(x1), reduce_fl3(x1 * x1)});
        P21 = columns6({reduce_fl3(Laurent::one()), reduce_fl3(x1x2), reduce_fl3(x1x2 * x1x2)});

        auto mult6 = [&](const Laurent& g) {
            std::vector<Vec> cols;
            cols.reserve(6);
            for (const Laurent& b : basis) cols.push_back(reduce_fl3(g * b));
            return columns6(cols);
        };

        // Koszul classes of the two flag divisors: twists x1 x2^2 and x1/x2.
        const Laurent kB = Laurent::one() - Laurent::monomial(1, 2, 0);
        const Laurent kD = Laurent::one() - Laurent::monomial(1, -1, 0);
        F12 = mult6(kB) * P12;
        F21 = mult6(kD) * P21;

        // Merges: twist by the inverse divisor class, push down the matching
        // ruling, express in plane coordinates. The odd cohomological shift
        // in the adjunction contributes the global minus sign.
        const Laurent tB = Laurent::monomial(-1, -2, 0);
        const Laurent tD = Laurent::monomial(-1, 1, 0);
        auto adjoint_rows = [&](const Mat& pullback, const Laurent& twist, int dem) {
            Mat m(3, 6);
            for (int j = 0; j < 6; ++j) {
                const Vec img = reduce_fl3(demazure(dem, twist * basis[static_cast<std::size_t>(j)]));
                const Vec c = detail::solve_exact(pullback, img);
                for (int i = 0; i < 3; ++i) m.at(i, j) = -c[static_cast<std::size_t>(i)];
            }
            return m;
        };
        R12 = adjoint_rows(P12, tB, 2);
        R21 = adjoint_rows(P21, tD, 1);

        // Point-level fork: the unit goes to the Koszul-dressed structure
        // sheaf x^3 - 3x + 2; merge back is Euler characteristic against the
        // inverse determinant twist x^{-3}, with even shift (sign +1).
        const Laurent1 cA = Laurent1::monomial(3) + Laurent1::monomial(1, -3) +
                            Laurent1::monomial(0, 2);
        {
            const Vec col = reduce_p2(cA);
            F3_12 = Mat(3, 1);
            F3_21 = Mat(3, 1);
            for (int i = 0; i < 3; ++i) F3_12.at(i, 0) = F3_21.at(i, 0) = col[static_cast<std::size_t>(i)];
            R12_3 = Mat(1, 3);
            R21_3 = Mat(1, 3);
            for (int k = 0; k < 3; ++k) {
                R12_3.at(0, k) = chi_p2(Laurent1::monomial(k - 3));
                R21_3.at(0, k) = chi_p2_dual(Laurent1::monomial(k - 3));
            }
        }

        // Crossings as cone Euler classes.
        T1 = Mat::identity(6) - F21 * R21;
        T2 = Mat::identity(6) - F12 * R12;
        Tm12_21 = F3_21 * R12_3 - R21 * F12;
        Tm21_12 = F3_12 * R21_3 - R12 * F21;

        chi6.resize(6);
        for (int j = 0; j < 6; ++j) chi6[static_cast<std::size_t>(j)] = chi_fl3(basis[static_cast<std::size_t>(j)]);

        battery();
    }

private:
    void battery() const {
        auto demand = [](bool ok, const char* what) {
            if (!ok) throw ConventionError(std::string("convention battery: ") + what);
        };
        demand(R12 * F12 == 2 * Mat::identity(3), "adjoint pair on the 12 edge is not 2I");
        demand(R21 * F21 == 2 * Mat::identity(3), "adjoint pair on the 21 edge is not 2I");
        demand(R12_3 * F3_12 == 3 * Mat::identity(1), "point pair through 12 is not [3]");
        demand(R21_3 * F3_21 == 3 * Mat::identity(1), "point pair through 21 is not [3]");
        demand(F12 * F3_12 == F21 * F3_21, "multifork matrices disagree");
        demand((F3_12 * R12_3 - R12 * F21 * R21 * F12 + Mat::identity(3)).is_zero(),
               "skein identity fails on the 12 side");
        demand((F3_21 * R21_3 - R21 * F12 * R12 * F21 + Mat::identity(3)).is_zero(),
               "skein identity fails on the 21 side");
        demand(T1 * T1 == Mat::identity(6), "strand crossing 1 is not an involution");
        demand(T2 * T2 == Mat::identity(6), "strand crossing 2 is not an involution");
        demand(Tm12_21 * Tm21_12 == Mat::identity(3), "mixed crossings fail to invert (21 side)");
        demand(Tm21_12 * Tm12_21 == Mat::identity(3), "mixed crossings fail to invert (12 side)");
    }
};

inline const KTables& ktables() {
    static const KTables tables;
    return tables;
}

inline KOperator build_generator_operator(const Generator& g) {
    if (!is_legal(g)) throw IllegalGenerator(0, "no such generator: " + to_token(g));
    const KTables& t = ktables();
    using P = Partition;
    auto pick = [&]() -> Mat {
        switch (g.kind) {
            case GenKind::Identity: return Mat::identity(k_rank(g.source));
            case GenKind::Fork:
                if (g.source == P::P3) return g.target == P::P12 ? t.F3_12 : t.F3_21;
                return g.source == P::P12 ? t.F12 : t.F21;
            case GenKind::Merge:
                if (g.target == P::P3) return g.source == P::P12 ? t.R12_3 : t.R21_3;
                return g.target == P::P12 ? t.R12 : t.R21;
            case GenKind::PosCross:
            case GenKind::NegCross:
                // t and d coincide at v = -1.
                if (g.source == P::P111) return g.position == 1 ? t.T1 : t.T2;
                return g.source == P::P12 ? t.Tm12_21 : t.Tm21_12;
        }
        return {};
    };
    return {g.source, g.target, pick()};
}

inline KOperator evaluate_word(const Word& w) {
    Mat m = Mat::identity(k_rank(w.source()));
    for (const Generator& g : w.steps()) m = build_generator_operator(g).matrix * m;
    return {w.source(), w.target(), std::move(m)};
}

}  // namespace gbr
