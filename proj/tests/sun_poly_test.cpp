#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcong/arith.hpp"
#include "qcong/q_objects.hpp"
#include "qcong/sun_poly.hpp"

using namespace qcong;

namespace {

QLaurent mono(Exp e, const XPoly& c = XPoly(1)) { return QLaurent::monomial(e, c); }

/// B_{a,b,d}^(alpha) at numeric q and integer x, straight from its display.
oracle::Rat b_poly_at(oracle::GaussTable& g, Exp a, Exp b, Exp d, Exp alpha, const Int& x) {
    oracle::Rat acc = 0;
    for (Exp s = 0; s <= a; ++s)
        for (Exp t = 1; t <= d - 1; ++t) {
            const oracle::Rat inner = oracle::rat_pow(g.q(), b + 1) * g(b - 1, t - 1) * g(d - b - 1, t) +
                                      g(b, t) * g(d - b - 2, t - 1);
            const Int c = oracle::binom(a, s) * oracle::binom(-a - 1, s);
            const long sign = (alpha * (s * d + t)) % 2 ? -1 : 1;
            acc += sign * oracle::rat_pow(g.q(), alpha * t * t) * oracle::rat_pow(oracle::Rat(c), alpha) *
                   oracle::rat_pow(inner, alpha) * oracle::rat_pow(oracle::Rat(x), s * d + t - 1);
        }
    return acc;
}

}  // namespace

TEST(WAlphaPoly, Values) {
    EXPECT_EQ(w_alpha_poly(3, 1), XPoly({1, 5, 5}));
    EXPECT_EQ(w_alpha_poly(3, 2), XPoly({1, 25, 25}));
    for (Exp a = 1; a <= 4; ++a) EXPECT_EQ(w_alpha_poly(1, a), XPoly(1));
    EXPECT_THROW(w_alpha_poly(0, 1), std::invalid_argument);
    EXPECT_THROW(w_alpha_poly(2, 0), std::invalid_argument);
}

TEST(WAlphaPoly, EvaluationOracle) {
    for (long n = 1; n <= 20; ++n)
        for (long a = 1; a <= 3; ++a)
            for (long x : {-2L, 1L, 7L}) ASSERT_EQ(w_alpha_poly(n, a).eval(Int(x)), oracle::w_poly_at(n, a, Int(x)));
}

TEST(WAlphaPoly, PowersAreCachedProducts) {
    for (Exp n = 1; n <= 8; ++n)
        for (Exp m = 0; m <= 3; ++m) ASSERT_EQ(w_alpha_poly_pow(n, 2, m), pow(w_alpha_poly(n, 2), m));
    EXPECT_EQ(&w_alpha_poly(5, 1), &w_alpha_poly(WPolyKey{5, 1}));
}

TEST(Schroder, Values) {
    EXPECT_EQ(schroder_poly(1), XPoly(1));
    EXPECT_EQ(schroder_poly(2), XPoly({1, 2}));
    EXPECT_EQ(schroder_poly(3), XPoly({1, 5, 5}));
}

TEST(Schroder, EqualsW) {
    for (Exp n = 1; n <= 30; ++n) ASSERT_EQ(schroder_poly(n), w_alpha_poly(n, 1)) << n;
}

TEST(WPoly, Symmetry) {
    for (Exp n = 1; n <= 30; ++n) {
        const XPoly& w = w_alpha_poly(n, 1);
        ASSERT_EQ(affine_subst(w, Int(-1), Int(-1)), n % 2 ? w : -w) << n;
    }
}

TEST(WPoly, SquaredSumIdentity) {
    const XPoly two_x_plus_1({1, 2});
    for (Exp n = 1; n <= 25; ++n) {
        XPoly sum;
        for (Exp k = 1; k <= n; ++k) {
            const long sign = (n - k) % 2 ? -1 : 1;
            sum.add_scaled(pow(w_alpha_poly(k, 1), 2), Int(sign * k * (k + 1) * (2 * k + 1)));
        }
        ASSERT_EQ(two_x_plus_1 * sum, Int(n * (n + 1) * (n + 2)) * w_alpha_poly(n, 1) * w_alpha_poly(n + 1, 1));
    }
}

TEST(WPoly, EvenIndexDivisibleByTwoXPlusOne) {
    const XPoly two_x_plus_1({1, 2});
    EXPECT_EQ(std::get<XPoly>(divexact(w_alpha_poly(2, 1), two_x_plus_1)), XPoly(1));
    for (Exp j = 1; j <= 15; ++j) {
        const auto res = divexact(w_alpha_poly(2 * j, 1), two_x_plus_1);
        ASSERT_TRUE(std::holds_alternative<XPoly>(res)) << j;
        ASSERT_EQ(std::get<XPoly>(res) * two_x_plus_1, w_alpha_poly(2 * j, 1));
    }
    // Odd indices are not: w_3(-1/2) = 1 - 5/2 + 5/4 != 0.
    EXPECT_FALSE(std::holds_alternative<XPoly>(divexact(w_alpha_poly(3, 1), two_x_plus_1)));
}

TEST(QWPoly, Values) {
    EXPECT_EQ(q_w_poly(1, 1), mono(2));
    EXPECT_EQ(q_w_poly(2, 1), mono(3) + mono(2, XPoly::var()) + mono(4, XPoly::var()));
    for (Exp a = 1; a <= 4; ++a) EXPECT_EQ(q_w_poly(1, a), mono(2 * a));
    EXPECT_EQ(q_w_poly_alt(1, 1), mono(2));
    EXPECT_EQ(q_w_poly_alt(2, 1), q_w_poly(2, 1));
}

TEST(QWPoly, NumericDefinitionOracle) {
    for (const oracle::Rat& q : {oracle::Rat(2), oracle::Rat(-1, 3)}) {
        oracle::GaussTable g(q);
        for (Exp k = 1; k <= 12; ++k)
            for (Exp a = 1; a <= 3; ++a)
                for (long x : {-1L, 2L})
                    ASSERT_EQ(oracle::eval(q_w_poly(k, a), q, Int(x)), oracle::q_w_at(g, k, a, Int(x))) << k << a;
    }
}

TEST(QWPoly, QToOneBridge) {
    for (Exp k = 1; k <= 20; ++k)
        for (Exp a = 1; a <= 3; ++a) ASSERT_EQ(q_w_poly(k, a).eval_q_one(), w_alpha_poly(k, a)) << k << ' ' << a;
}

TEST(QWPoly, ReflectedFormAgrees) {
    for (Exp k = 1; k <= 15; ++k)
        for (Exp a = 1; a <= 3; ++a) ASSERT_EQ(q_w_poly_alt(k, a), q_w_poly(k, a)) << k << ' ' << a;
}

TEST(BPoly, Values) {
    EXPECT_EQ(b_poly({0, 1, 3, 1}), -mono(1) - mono(3));
    EXPECT_EQ(q_w_poly(1, 1) - b_poly({0, 1, 3, 1}), QLaurent(cyclotomic(3)).shifted(1));
    EXPECT_THROW(b_poly({0, 0, 4, 1}), std::invalid_argument);
    EXPECT_THROW(b_poly({0, 3, 4, 1}), std::invalid_argument);
    EXPECT_THROW(b_poly({0, 1, 2, 1}), std::invalid_argument);
}

TEST(BPoly, NumericDisplayOracle) {
    oracle::GaussTable g(oracle::Rat(3));
    for (Exp d = 3; d <= 7; ++d)
        for (Exp b = 1; b <= d - 2; ++b)
            for (Exp a = 0; a <= 2; ++a)
                for (Exp al = 1; al <= 2; ++al)
                    ASSERT_EQ(oracle::eval(b_poly({a, b, d, al}), g.q(), Int(2)), b_poly_at(g, a, b, d, al, Int(2)))
                        << a << ' ' << b << ' ' << d << ' ' << al;
}

TEST(LemmaCongruence, Examples) {
    const auto v = lemma_congruence_check(0, 1, 3, 1);
    ASSERT_EQ(v.size(), 2u);
    for (const auto& x : v) EXPECT_TRUE(x.pass) << x.statement;
    EXPECT_TRUE(rem_monic(q_w_poly(1, 1) - b_poly({0, 1, 3, 1}).shifted(-3), cyclotomic(3)).is_zero());

    const auto four = lemma_congruence_check(1, 1, 4, 1);
    ASSERT_EQ(four.size(), 4u);
    for (const auto& x : four) EXPECT_TRUE(x.pass) << x.statement;

    EXPECT_THROW(lemma_congruence_check(0, 5, 4, 1), std::invalid_argument);
    EXPECT_THROW(lemma_congruence_check(-1, 1, 4, 1), std::invalid_argument);
}

TEST(LemmaCongruence, Sweep) {
    for (Exp a = 0; a <= 3; ++a)
        for (Exp d = 3; d <= 10; ++d)
            for (Exp b = 0; b <= d - 2; ++b)
                for (Exp al = 1; al <= 2; ++al) {
                    if (b == 0 && d <= 3) continue;
                    for (const auto& v : lemma_congruence_check(a, b, d, al))
                        ASSERT_TRUE(v.pass) << v.statement << " a=" << a << " b=" << b << " d=" << d;
                }
}

TEST(LemmaCongruence, WrongShiftIsDetected) {
    // The unit q^{-3} in the second congruence matters: q^{-2} does not work.
    EXPECT_FALSE(rem_monic(q_w_poly(1, 1) - b_poly({0, 1, 3, 1}).shifted(-2), cyclotomic(3)).is_zero());
}
