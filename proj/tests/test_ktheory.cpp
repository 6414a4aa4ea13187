#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <initializer_list>
#include <random>

#include "gbr/demazure.hpp"
#include "gbr/kbasis.hpp"
#include "gbr/koperator.hpp"
#include "gbr/parse.hpp"
#include "gbr/relations.hpp"
#include "gbr/sampling.hpp"

using namespace gbr;

namespace {

Mat mat(int r, int c, std::initializer_list<long long> vals) {
    Mat m(r, c);
    std::copy(vals.begin(), vals.end(), m.a.begin());
    return m;
}

Laurent mono(int a, int b, int c, long long coeff = 1) {
    return Laurent::monomial(a, b, c, coeff);
}

Laurent random_laurent(std::mt19937& rng) {
    Laurent f;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t)
        f += mono(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3,
                  static_cast<int>(rng() % 7) - 3,
                  static_cast<long long>(rng() % 9) - 4);
    return f;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    const Laurent x1 = mono(1, 0, 0);
    const Laurent x2 = mono(0, 1, 0);
    REQUIRE(x1 * x2 == mono(1, 1, 0));
    REQUIRE((x1 + x2).swapped(1) == x1 + x2);
    REQUIRE(x1.swapped(1) == x2);
    REQUIRE(x2.swapped(2) == mono(0, 0, 1));
    REQUIRE((x1 - x1).is_zero());
    REQUIRE(mono(-2, 0, 3) * mono(2, 0, -3) == Laurent::one());

    const Laurent1 x = Laurent1::monomial(1);
    REQUIRE(x * Laurent1::monomial(-1) == Laurent1::one());
    REQUIRE(embed(x, {1, 1, 0}) == mono(1, 1, 0));
}

TEST_CASE("normal form in the flag quotient") {
    SECTION("frozen coordinates") {
        REQUIRE(reduce_fl3(mono(0, 0, 1)) == Vec{3, -1, 0, -1, 0, 0});
        REQUIRE(reduce_fl3(mono(-1, 0, 0)) == Vec{3, -3, 1, 0, 0, 0});
        REQUIRE(reduce_fl3(mono(0, 2, 0)) == Vec{-3, 3, -1, 3, -1, 0});
        REQUIRE(reduce_fl3(mono(2, 2, 0)) == Vec{0, -1, 0, -1, 3, 0});
        REQUIRE(reduce_fl3(mono(0, 1, 1)) == Vec{3, -3, 1, 0, 0, 0});
    }

    SECTION("the symmetric functions hit their fixed values") {
        const Laurent e1 = mono(1, 0, 0) + mono(0, 1, 0) + mono(0, 0, 1);
        const Laurent e2 = mono(1, 1, 0) + mono(1, 0, 1) + mono(0, 1, 1);
        const Laurent e3 = mono(1, 1, 1);
        REQUIRE(reduce_fl3(e1) == Vec{3, 0, 0, 0, 0, 0});
        REQUIRE(reduce_fl3(e2) == Vec{3, 0, 0, 0, 0, 0});
        REQUIRE(reduce_fl3(e3) == Vec{1, 0, 0, 0, 0, 0});
    }

    SECTION("basis elements are their own coordinates") {
        const auto& basis = kfl3_basis();
        for (std::size_t j = 0; j < 6; ++j) {
            Vec expect(6, 0);
            expect[j] = 1;
            REQUIRE(reduce_fl3(basis[j]) == expect);
        }
    }

    SECTION("each variable satisfies (t-1)^3 = 0") {
        for (int var = 0; var < 3; ++var) {
            const Laurent x = mono(var == 0, var == 1, var == 2);
            const Laurent om = x - Laurent::one();
            REQUIRE(reduce_fl3(om * om * om) == Vec(6, 0));
        }
    }

    SECTION("reduction is a ring map on a sample") {
        std::mt19937 rng(67);
        for (int trial = 0; trial < 100; ++trial) {
            const Laurent f = random_laurent(rng);
            const Laurent g = random_laurent(rng);
            Vec sum = reduce_fl3(f);
            const Vec gs = reduce_fl3(g);
            for (std::size_t i = 0; i < 6; ++i) sum[i] += gs[i];
            REQUIRE(reduce_fl3(f + g) == sum);
        }
    }

    SECTION("plane quotient spot values") {
        REQUIRE(reduce_p2(Laurent1::one()) == Vec{1, 0, 0});
        REQUIRE(reduce_p2(Laurent1::monomial(2)) == Vec{0, 0, 1});
        // x^3 = 3x^2 - 3x + 1 once (1-x)^3 vanishes.
        REQUIRE(reduce_p2(Laurent1::monomial(3)) == Vec{1, -3, 3});
        REQUIRE(reduce_p2(Laurent1::monomial(-1)) == Vec{3, -3, 1});
    }
}

TEST_CASE("demazure operators") {
    const Laurent x1 = mono(1, 0, 0);
    const Laurent x2 = mono(0, 1, 0);
    const Laurent x3 = mono(0, 0, 1);

    SECTION("spot values") {
        REQUIRE(demazure(1, Laurent::one()) == Laurent::one());
        REQUIRE(demazure(1, x1) == x1 + x2);
        REQUIRE(demazure(1, x2).is_zero());
        REQUIRE(demazure(2, x2) == x2 + x3);
        REQUIRE(demazure(1, x1 * x1) == x1 * x1 + x1 * x2 + x2 * x2);
        REQUIRE(demazure(2, x2 * x2 * x3) == x2 * x2 * x3 + x2 * x3 * x3);
        REQUIRE(demazure(1, x1 * x2 * x2).is_zero());
    }

    SECTION("symmetric functions pass through untouched") {
        const Laurent e2 = x1 * x2 + x1 * x3 + x2 * x3;
        REQUIRE(demazure(1, e2) == e2);
        REQUIRE(demazure(2, e2) == e2);
    }

    SECTION("idempotence and the braid identity on 60 random monomials") {
        std::mt19937 rng(71);
        for (int trial = 0; trial < 60; ++trial) {
            const Laurent f = mono(static_cast<int>(rng() % 9) - 4,
                                   static_cast<int>(rng() % 9) - 4,
                                   static_cast<int>(rng() % 9) - 4);
            for (int i : {1, 2}) {
                const Laurent once = demazure(i, f);
                REQUIRE(demazure(i, once) == once);
            }
            REQUIRE(demazure(1, demazure(2, demazure(1, f))) ==
                    demazure(2, demazure(1, demazure(2, f))));
        }
    }

    SECTION("twisted Leibniz in the form pi_i(f) for s_i-invariant f times g") {
        std::mt19937 rng(73);
        for (int trial = 0; trial < 50; ++trial) {
            const Laurent g = random_laurent(rng);
            const Laurent sym = random_laurent(rng);
            for (int i : {1, 2}) {
                const Laurent inv = sym + sym.swapped(i);  // s_i-invariant by construction
                REQUIRE(demazure(i, inv * g) == inv * demazure(i, g));
            }
        }
    }
}

TEST_CASE("euler characteristics") {
    SECTION("flag basis") {
        Vec chi;
        for (const Laurent& b : kfl3_basis()) chi.push_back(chi_fl3(b));
        REQUIRE(chi == Vec{1, 3, 6, 0, 3, 8});
        REQUIRE(ktables().chi6 == chi);
    }

    SECTION("plane line bundles") {
        REQUIRE(chi_p2(Laurent1::monomial(-3)) == 1);
        REQUIRE(chi_p2(Laurent1::monomial(-2)) == 0);
        REQUIRE(chi_p2(Laurent1::monomial(-1)) == 0);
        REQUIRE(chi_p2(Laurent1::one()) == 1);
        REQUIRE(chi_p2(Laurent1::monomial(1)) == 3);
        REQUIRE(chi_p2(Laurent1::monomial(2)) == 6);
        REQUIRE(chi_p2(Laurent1::monomial(3)) == 10);
        // The dual plane sees the same numbers.
        for (int k = -3; k <= 3; ++k)
            REQUIRE(chi_p2_dual(Laurent1::monomial(k)) == chi_p2(Laurent1::monomial(k)));
    }
}

TEST_CASE("basis certificates") {
    SECTION("grothendieck coordinates are unimodular with determinant -1") {
        const auto rows = grothendieck_coordinates();
        REQUIRE(rows.size() == 6);
        REQUIRE(rows[0] == Vec{1, 0, 0, 0, 0, 0});
        REQUIRE(rows[1] == Vec{-2, 1, 0, 1, 0, 0});
        REQUIRE(rows[2] == Vec{-2, 3, -1, 0, 0, 0});
        REQUIRE(rows[3] == Vec{1, -1, 0, -1, 1, 0});
        REQUIRE(rows[4] == Vec{1, -2, 1, 0, 0, 0});
        REQUIRE(rows[5] == Vec{-1, 2, -1, 1, -2, 1});
        REQUIRE(bareiss_det(rows) == -1);
    }

    SECTION("determinant routine on knowns") {
        REQUIRE(bareiss_det({{2, 0}, {0, 3}}) == 6);
        REQUIRE(bareiss_det({{0, 1}, {1, 0}}) == -1);
        REQUIRE(bareiss_det({{1, 2}, {2, 4}}) == 0);
    }

    SECTION("the certificate check runs clean") {
        REQUIRE_NOTHROW(check_basis_unimodular());
    }
}

TEST_CASE("frozen operator matrices") {
    const KTables& t = ktables();

    REQUIRE(t.F12 == mat(6, 3, {2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 1, 0, -3, -3, 1, 1, 0, -3}));
    REQUIRE(t.F21 == mat(6, 3, {2, 0, 0, -3, 0, -1, 0, -1, 0, 0, 0, -2, 0, 1, 6, 1, 0, -3}));
    REQUIRE(t.R12 == mat(3, 6, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
    REQUIRE(t.R21 == mat(3, 6, {1, 0, 0, 0, 0, 0, 0, 0, -1, 3, 1, 0, 0, 0, 0, -1, 0, 0}));
    REQUIRE(t.F3_12 == mat(3, 1, {3, -6, 3}));
    REQUIRE(t.F3_21 == mat(3, 1, {3, -6, 3}));
    REQUIRE(t.R12_3 == mat(1, 3, {1, 0, 0}));
    REQUIRE(t.R21_3 == mat(1, 3, {1, 0, 0}));
    REQUIRE(t.T1 == mat(6, 6, {-1, 0, 0, 0,  0, 0,  //
                               3,  1, 0, -1, 0, 0,  //
                               0,  0, 0, 3,  1, 0,  //
                               0,  0, 0, -1, 0, 0,  //
                               0,  0, 1, 3,  0, 0,  //
                               -1, 0, 0, -3, 0, 1}));
    REQUIRE(t.T2 == mat(6, 6, {-1, 0,  0,  0, 0, 0,  //
                               0,  -1, 0,  0, 0, 0,  //
                               0,  0,  -1, 0, 0, 0,  //
                               0,  -1, 0,  1, 0, 0,  //
                               3,  3,  -1, 0, 1, 0,  //
                               -1, 0,  3,  0, 0, 1}));
    REQUIRE(t.Tm12_21 == mat(3, 3, {1, 0, 0, -3, 0, 1, 3, 1, 0}));
    REQUIRE(t.Tm21_12 == mat(3, 3, {1, 0, 0, -3, 0, 1, 3, 1, 0}));
}

TEST_CASE("operator identities") {
    const KTables& t = ktables();

    SECTION("adjoint pairs") {
        REQUIRE(t.R12 * t.F12 == 2 * Mat::identity(3));
        REQUIRE(t.R21 * t.F21 == 2 * Mat::identity(3));
        REQUIRE(t.R12_3 * t.F3_12 == 3 * Mat::identity(1));
        REQUIRE(t.R21_3 * t.F3_21 == 3 * Mat::identity(1));
    }

    SECTION("the two double forks from the point agree") {
        REQUIRE(t.F12 * t.F3_12 == t.F21 * t.F3_21);
        REQUIRE(t.F12 * t.F3_12 == mat(6, 1, {6, -12, 6, -6, 12, -6}));
    }

    SECTION("skein identity") {
        REQUIRE((t.F3_12 * t.R12_3 - t.R12 * t.F21 * t.R21 * t.F12 + Mat::identity(3))
                    .is_zero());
        REQUIRE((t.F3_21 * t.R21_3 - t.R21 * t.F12 * t.R12 * t.F21 + Mat::identity(3))
                    .is_zero());
    }

    SECTION("crossings are involutive") {
        REQUIRE(t.T1 * t.T1 == Mat::identity(6));
        REQUIRE(t.T2 * t.T2 == Mat::identity(6));
        REQUIRE(t.Tm12_21 * t.Tm21_12 == Mat::identity(3));
        REQUIRE(t.Tm21_12 * t.Tm12_21 == Mat::identity(3));
    }
}

TEST_CASE("word evaluation") {
    using P = Partition;

    SECTION("ranks follow the object") {
        REQUIRE(k_rank(P::P3) == 1);
        REQUIRE(k_rank(P::P12) == 3);
        REQUIRE(k_rank(P::P21) == 3);
        REQUIRE(k_rank(P::P111) == 6);
    }

    SECTION("identity words evaluate to identity matrices") {
        for (Partition p : all_partitions) {
            const KOperator op = evaluate_word(Word(p));
            REQUIRE(op.matrix == Mat::identity(k_rank(p)));
        }
    }

    SECTION("generators get their table matrices, t and d alike") {
        REQUIRE(build_generator_operator(pos_cross(P::P12, P::P21)).matrix ==
                ktables().Tm12_21);
        REQUIRE(build_generator_operator(neg_cross(P::P12, P::P21)).matrix ==
                ktables().Tm12_21);
        REQUIRE(build_generator_operator(strand_cross(true, 1)).matrix == ktables().T1);
        REQUIRE(build_generator_operator(strand_cross(false, 2)).matrix == ktables().T2);
        REQUIRE(build_generator_operator(fork(P::P3, P::P21)).matrix ==
                ktables().F3_21);
        REQUIRE(build_generator_operator(merge(P::P111, P::P12)).matrix == ktables().R12);
    }

    SECTION("the full loop is multiplication by 6") {
        const KOperator op =
            evaluate_word(parse_word("f[3>12] ; f[12>111] ; g[111>12] ; g[12>3]"));
        REQUIRE(op.matrix == mat(1, 1, {6}));
    }

    SECTION("every relation holds as a matrix identity") {
        for (const Relation& r : relation_closure()) {
            INFO(r.name);
            REQUIRE(evaluate_word(r.lhs).matrix == evaluate_word(r.rhs).matrix);
        }
    }

    SECTION("evaluation is a functor: composite words multiply") {
        std::mt19937 rng(79);
        for (int trial = 0; trial < 150; ++trial) {
            const Partition src = all_partitions[rng() % 4];
            const Word a = random_word(rng, src, rng() % 5);
            const Word b = random_word(rng, a.target(), rng() % 5);
            REQUIRE(evaluate_word(compose(a, b)).matrix ==
                    evaluate_word(b).matrix * evaluate_word(a).matrix);
        }
    }

    SECTION("flop-flop words act as the identity") {
        REQUIRE(evaluate_word(parse_word("t[12>21] ; t[21>12]")).matrix ==
                Mat::identity(3));
        REQUIRE(evaluate_word(parse_word("t[21>12] ; t[12>21]")).matrix ==
                Mat::identity(3));
    }

    SECTION("illegal generators are rejected") {
        REQUIRE_THROWS_AS(build_generator_operator(Generator{GenKind::Fork, P::P111, P::P3, 0}),
                          IllegalGenerator);
    }
}
