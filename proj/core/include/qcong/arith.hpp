#ifndef QCONG_ARITH_HPP
#define QCONG_ARITH_HPP

#include <string_view>
#include <variant>
#include <vector>

#include "qcong/int.hpp"
#include "qcong/poly.hpp"

namespace qcong {

/// C(n, k) for any integer n: 0 when k < 0, otherwise the falling product
/// n(n-1)...(n-k+1) / k!. Negative n gives (-1)^k C(k-n-1, k).
Int binomial_general(const Int& n, Exp k);

/// Moebius function; throws std::invalid_argument for n <= 0.
int mobius(Exp n);

/// Positive divisors of n in ascending order.
std::vector<Exp> divisors(Exp n);

/// lcm(lo, lo+1, ..., hi); requires 1 <= lo <= hi.
Int lcm_range(Exp lo, Exp hi);

/// Pochhammer symbol (x0)_n = x0 (x0+1) ... (x0+n-1), with (x0)_0 = 1.
Int rising_factorial(const Int& x0, Exp n);

/// w(n, k) = C(n-1, k-1) C(n+k, k-1) / k for 1 <= k <= n.
Int w_number(Exp n, Exp k);

/// The subtraction form C(n-1,k-1) C(n+k,k) - C(n,k) C(n+k,k-1) of w(n, k).
Int w_number_difference_form(Exp n, Exp k);

/// Narayana number N(n, k) = C(n, k) C(n, k-1) / n for 1 <= k <= n.
Int narayana_number(Exp n, Exp k);

enum class IdentityId {
    alternating_sum,   // sum_{k=m}^{n} (-1)^(n-k) C(k-1, m-1) w(n,k) = w(n,m)
    w_from_narayana,   // w(n,k) = sum_j C(n-j, k-j) N(n,j)
    narayana_from_w,   // N(n,k) = sum_j C(n-j, k-j) (-1)^(k-j) w(n,j)
    row_sum_parity,    // sum_{k=0}^{2b} w(n,k+1) is odd
};

std::string_view identity_name(IdentityId id);

struct IdentityReport {
    IdentityId id;
    std::vector<Exp> params;
    bool holds = false;
    /// Integers for scalar identities; for the transforms the k-th value
    /// sits at x^(k-1) so a whole row compares at once.
    std::variant<Int, XPoly> lhs;
    std::variant<Int, XPoly> rhs;
};

/// Checks the four integer identities at (n, m, b); 1 <= m <= n, b >= 0.
/// Parity-sum terms w(n, j) with j > n are taken as 0.
std::vector<IdentityReport> w_identity_suite(Exp n, Exp m, Exp b);

}  // namespace qcong

#endif  // QCONG_ARITH_HPP
