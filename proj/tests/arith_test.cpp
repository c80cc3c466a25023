#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcong/arith.hpp"

using namespace qcong;

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binomial_general(Int(4), 2), 6);
    EXPECT_EQ(binomial_general(Int(-2), 3), -4);
    EXPECT_EQ(binomial_general(Int(7), 9), 0);
    EXPECT_EQ(binomial_general(Int(5), -1), 0);
    for (long n : {-7L, 0L, 3L, 100L}) EXPECT_EQ(binomial_general(Int(n), 0), 1);
}

TEST(Binomial, MatchesGmp) {
    for (long n = -40; n <= 60; ++n)
        for (long k = 0; k <= 40; ++k) ASSERT_EQ(binomial_general(Int(n), k), oracle::binom(n, k)) << n << ' ' << k;
}

TEST(Binomial, NegativeTopReflection) {
    for (long n = 1; n <= 20; ++n)
        for (long k = 0; k <= 20; ++k) {
            const Int sign = k % 2 ? -1 : 1;
            ASSERT_EQ(binomial_general(Int(-n), k), sign * oracle::binom(n + k - 1, k));
        }
}

TEST(Binomial, Pascal) {
    for (long n = -30; n <= 30; ++n)
        for (long k = 0; k <= 30; ++k)
            ASSERT_EQ(binomial_general(Int(n), k),
                      binomial_general(Int(n - 1), k - 1) + binomial_general(Int(n - 1), k));
}

TEST(Binomial, HugeArguments) {
    const Int n = pow_int(Int(10), 30);
    EXPECT_EQ(binomial_general(n, 2), n * (n - 1) / 2);
}

TEST(Mobius, Values) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(12), 0);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_THROW(mobius(0), std::invalid_argument);
    EXPECT_THROW(mobius(-3), std::invalid_argument);
}

TEST(Mobius, DivisorSumIsIndicator) {
    for (Exp n = 1; n <= 200; ++n) {
        int s = 0;
        for (Exp d : divisors(n)) s += mobius(d);
        ASSERT_EQ(s, n == 1 ? 1 : 0) << n;
        ASSERT_EQ(mobius(n), oracle::mobius_trial(n)) << n;
    }
}

TEST(Divisors, Lists) {
    EXPECT_EQ(divisors(1), std::vector<Exp>{1});
    EXPECT_EQ(divisors(12), (std::vector<Exp>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(97), (std::vector<Exp>{1, 97}));
    EXPECT_THROW(divisors(0), std::invalid_argument);
    for (Exp n = 1; n <= 150; ++n) {
        std::vector<Exp> brute;
        for (Exp d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        ASSERT_EQ(divisors(n), brute);
    }
}

TEST(LcmRange, Values) {
    EXPECT_EQ(lcm_range(1, 10), 2520);
    EXPECT_EQ(lcm_range(2, 5), 60);
    EXPECT_EQ(lcm_range(7, 7), 7);
    EXPECT_THROW(lcm_range(0, 3), std::invalid_argument);
    EXPECT_THROW(lcm_range(4, 3), std::invalid_argument);
}

TEST(LcmRange, DividesEveryMemberAndIsMinimal) {
    for (Exp lo = 1; lo <= 15; ++lo)
        for (Exp hi = lo; hi <= lo + 12; ++hi) {
            const Int l = lcm_range(lo, hi);
            for (Exp i = lo; i <= hi; ++i) ASSERT_TRUE(divides(Int(i), l));
            // Any proper divisor l/p misses some member.
            for (Exp p = 2; p <= hi; ++p) {
                if (!divides(Int(p), l)) continue;
                const Int smaller = l / p;
                bool all = true;
                for (Exp i = lo; i <= hi; ++i) all = all && divides(Int(i), smaller);
                ASSERT_FALSE(all);
            }
        }
}

TEST(RisingFactorial, Values) {
    EXPECT_EQ(rising_factorial(Int(2), 3), 24);
    EXPECT_EQ(rising_factorial(Int(1), 5), 120);
    EXPECT_EQ(rising_factorial(Int(-3), 0), 1);
    EXPECT_EQ(rising_factorial(Int(-3), 4), 0);
    EXPECT_EQ(rising_factorial(Int(-5), 2), 20);
    EXPECT_THROW(rising_factorial(Int(1), -1), std::invalid_argument);
}

TEST(WNumber, Values) {
    EXPECT_EQ(w_number(3, 2), 5);
    EXPECT_EQ(w_number(2, 2), 2);
    EXPECT_EQ(w_number(1, 1), 1);
    EXPECT_THROW(w_number(3, 0), std::invalid_argument);
    EXPECT_THROW(w_number(3, 4), std::invalid_argument);
}

TEST(WNumber, ClosedFormsAgree) {
    for (Exp n = 1; n <= 40; ++n)
        for (Exp k = 1; k <= n; ++k) {
            const Int prod = oracle::binom(n - 1, k - 1) * oracle::binom(n + k, k - 1);
            ASSERT_TRUE(divides(Int(k), prod));
            ASSERT_EQ(w_number(n, k), prod / k);
            ASSERT_EQ(w_number(n, k), w_number_difference_form(n, k));
            ASSERT_EQ(w_number(n, k), oracle::w(n, k));
        }
}

TEST(WNumber, DiagonalIsCatalan) {
    for (Exp n = 1; n <= 40; ++n) ASSERT_EQ(w_number(n, n) * (n + 1), oracle::binom(2 * n, n));
}

TEST(Narayana, Values) {
    EXPECT_EQ(narayana_number(3, 2), 3);
    EXPECT_EQ(narayana_number(4, 2), 6);
    for (Exp n = 1; n <= 20; ++n) EXPECT_EQ(narayana_number(n, 1), 1);
    EXPECT_THROW(narayana_number(3, 4), std::invalid_argument);
}

TEST(Narayana, RowSumsAreCatalan) {
    for (Exp n = 1; n <= 30; ++n) {
        Int s = 0;
        for (Exp k = 1; k <= n; ++k) s += narayana_number(n, k);
        ASSERT_EQ(s * (n + 1), oracle::binom(2 * n, n));
    }
}

namespace {

const IdentityReport& find(const std::vector<IdentityReport>& reps, IdentityId id) {
    for (const auto& r : reps)
        if (r.id == id) return r;
    throw std::runtime_error("missing identity report");
}

}  // namespace

TEST(IdentitySuite, WorkedExamples) {
    const auto reps = w_identity_suite(3, 2, 1);
    ASSERT_EQ(reps.size(), 4u);
    const auto& alt = find(reps, IdentityId::alternating_sum);
    EXPECT_TRUE(alt.holds);
    EXPECT_EQ(std::get<Int>(alt.lhs), 5);

    const auto& tr = find(reps, IdentityId::w_from_narayana);
    EXPECT_TRUE(tr.holds);
    EXPECT_EQ(std::get<XPoly>(tr.lhs), XPoly({1, 5, 5}));

    EXPECT_TRUE(find(reps, IdentityId::narayana_from_w).holds);
    EXPECT_TRUE(find(reps, IdentityId::row_sum_parity).holds);
    EXPECT_EQ(identity_name(IdentityId::alternating_sum), "alternating-sum");
}

TEST(IdentitySuite, HoldsIffSidesEqual) {
    for (Exp n = 1; n <= 14; ++n)
        for (Exp m = 1; m <= n; ++m)
            for (Exp b = 0; b <= 6; ++b)
                for (const auto& r : w_identity_suite(n, m, b)) {
                    ASSERT_TRUE(r.holds) << identity_name(r.id) << " n=" << n << " m=" << m << " b=" << b;
                    ASSERT_EQ(r.lhs, r.rhs);
                }
}

TEST(IdentitySuite, ParityAgainstDirectSum) {
    for (long n = 1; n <= 25; ++n)
        for (long b = 0; b <= 12; ++b) {
            Int s = 0;
            for (long k = 0; k <= 2 * b && k + 1 <= n; ++k) s += oracle::w(n, k + 1);
            ASSERT_TRUE(mpz_odd_p(s.get_mpz_t())) << n << ' ' << b;
        }
}

TEST(IdentitySuite, RejectsBadArguments) {
    EXPECT_THROW(w_identity_suite(3, 4, 0), std::invalid_argument);
    EXPECT_THROW(w_identity_suite(3, 0, 0), std::invalid_argument);
    EXPECT_THROW(w_identity_suite(3, 1, -1), std::invalid_argument);
}
