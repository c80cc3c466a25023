#ifndef QCONG_CONGRUENCE_HPP
#define QCONG_CONGRUENCE_HPP

#include <vector>

#include "qcong/qlaurent.hpp"
#include "qcong/verdict.hpp"

namespace qcong {

// ---------------------------------------------------------------------------
// q-theorem sums. Each mirrors its display: k runs over 0..n-1 and the k = 0
// term vanishes because its q-integer factor is [0] = 0.
// ---------------------------------------------------------------------------

/// sum_k [k(k+1)]^r [2k+1] q^((n-1-k)(alpha m+1)) w_k(x;q)^m
QLaurent qsum_plain(Exp n, Exp alpha, Exp m, Exp r);

/// sum_k (-1)^k [k(k+1)]_{q^2}^r [2k+1] q^((n-1-k)(2 alpha m+1)) w_k(x;q^2)^m
QLaurent qsum_alternating(Exp n, Exp alpha, Exp m, Exp r);

/// sum_k [k(k+2)]^r [2(k+1)] q^((n-2-k)(2 alpha m+1)) (w_k(x;q) w_{k+1}(x;q))^m
QLaurent qsum_product(Exp n, Exp alpha, Exp m, Exp r);

/// sum_k [(k)_beta (k+beta+1)_beta]^r [2(k+beta)] q^((n-2beta-k)(2 beta alpha m+1))
///       prod_{i=0}^{2beta-1} w_{k+i}(x;q)^m
/// The bracket is the q-integer of the integer product of the two rising factorials.
QLaurent qsum_general(Exp n, Exp alpha, Exp beta, Exp m, Exp r);

/// Pass iff [n] divides the sum (direct monic remainder); witness is the remainder.
Verdict verify_divisible_by_qn(const QLaurent& sum, Exp n);

/// One factor of prod_{d|n, d>1 odd} Phi_d(q) * prod_{d|n, d>1 even} Phi_d(q^2),
/// with Phi_d(q^2) represented by Phi_{2d}(q).
struct FactorCheck {
    Exp divisor = 0;
    QPoly modulus;
    LaurentDivMod division;
};

std::vector<FactorCheck> cyclotomic_product_factors(const QLaurent& sum, Exp n);

/// Pass iff every factor above leaves remainder zero.
Verdict verify_cyclotomic_product(const QLaurent& sum, Exp n);

// ---------------------------------------------------------------------------
// Integrality statements at q = 1; k runs over 1..n.
// ---------------------------------------------------------------------------

enum class Sign { plus, alternating };

/// sum_{k=1}^{n} eps^k k^r (k+1)^r (2k+1) w_k^(alpha)(x)^m, eps = +1 or -1.
XPoly int_sum_plain_numerator(Exp n, Exp alpha, Exp m, Exp r, Sign sign);

/// Pass iff (2,n) times the numerator is divisible by n(n+1)(n+2) coefficientwise.
Verdict int_sum_plain(Exp n, Exp alpha, Exp m, Exp r, Sign sign);

/// sum_{k=1}^{n} (k)_beta^r (k+beta+1)_beta^r (k+beta) prod_{i=0}^{2beta-1} w_{k+i}^(alpha)(x)^m
XPoly int_sum_lcm_numerator(Exp n, Exp alpha, Exp beta, Exp m, Exp r);

/// Pass iff 2 times the numerator is divisible by lcm(n, ..., n+2beta+1).
Verdict int_sum_lcm(Exp n, Exp alpha, Exp beta, Exp m, Exp r);

enum class ConjectureVariant {
    c52_eq14_even_n,  // (1/(n(n+1)(n+2))) sum (-1)^k k(k+1)(2k+1) w_k^(alpha)(x)^m, alpha > 1
    c54_ii,           // 2(2,n)/(n(n+1)(n+2)(2x+1)^m) sum k(k+1)(k+2) (w_k w_{k+1})^m
    c54_iii,          // 4/(n(n+1)(n+2)(2x+1)^3) sum k(k+1)(k+2) w_k w_{k+1}, n even
};

/// Empirical check of one conjecture instance. c54_ii and c54_iii use the
/// plain w_k (alpha must be 1); c54_iii additionally needs m = 1 and even n;
/// c52_eq14_even_n needs alpha > 1.
Verdict conjecture_check(ConjectureVariant variant, Exp n, Exp alpha, Exp m);

}  // namespace qcong

#endif  // QCONG_CONGRUENCE_HPP
