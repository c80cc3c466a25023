#ifndef QCONG_SUN_POLY_HPP
#define QCONG_SUN_POLY_HPP

#include <vector>

#include "qcong/qlaurent.hpp"
#include "qcong/verdict.hpp"

namespace qcong {

/// Index of w_n^(alpha)(x); both entries >= 1.
struct WPolyKey {
    Exp n = 1;
    Exp alpha = 1;
};

/// Index of B_{a,b,d}^(alpha)(x;q): a >= 0, d > 2, 1 <= b <= d-2, alpha >= 1.
struct BPolyKey {
    Exp a = 0;
    Exp b = 1;
    Exp d = 3;
    Exp alpha = 1;
};

/// w_n^(alpha)(x) = sum_{k=1}^{n} w(n,k)^alpha x^(k-1); memoized.
const XPoly& w_alpha_poly(Exp n, Exp alpha);
inline const XPoly& w_alpha_poly(const WPolyKey& key) { return w_alpha_poly(key.n, key.alpha); }

/// (w_n^(alpha)(x))^m; memoized since the integrality sums reuse it.
const XPoly& w_alpha_poly_pow(Exp n, Exp alpha, Exp m);

/// Little Schroeder polynomial sum_k N(n,k) x^(k-1) (x+1)^(n-k).
XPoly schroder_poly(Exp n);

/*
 * q-analogue
 *   w_k^(alpha)(x;q) = sum_{j=1}^{k} q^(alpha (C(j+1,2) - (k+1)(j-1)))
 *       (qbinom(k-1,j-1) qbinom(k+j,j) - qbinom(k,j) qbinom(k+j,j-1))^alpha x^(j-1).
 * Memoized per (k, alpha).
 */
const QLaurent& q_w_poly(Exp k, Exp alpha);

/*
 * The reflected form
 *   sum_j (-1)^(alpha j) q^(alpha j^2)
 *       (q^(k+1) qbinom(k-1,j-1) qbinom(-k-1,j) + qbinom(k,j) qbinom(-k-2,j-1))^alpha x^(j-1),
 * summed over its support 1 <= j <= k. Built independently of q_w_poly and
 * equal to it identically.
 */
QLaurent q_w_poly_alt(Exp k, Exp alpha);

/// B_{a,b,d}^(alpha)(x;q), summed over 0 <= s <= a and 1 <= t <= d-1.
QLaurent b_poly(const BPolyKey& key);

/*
 * Checks, modulo Phi_d(q),
 *   w_{ad+b}       == B_{a,b,d}                       (d > 2, 1 <= b <= d-2)
 *   w_{ad+d-b-1}   == q^(-alpha(2b+1)) B_{a,b,d}
 *   w_{ad+b+1}     == B_{a,b+1,d}                     (d > 3, 0 <= b <= d-3)
 *   w_{ad+d-b-2}   == q^(-alpha(2b+3)) B_{a,b+1,d}
 * returning one verdict per congruence whose domain contains (b, d).
 * Throws std::invalid_argument when neither domain does.
 */
std::vector<Verdict> lemma_congruence_check(Exp a, Exp b, Exp d, Exp alpha);

}  // namespace qcong

#endif  // QCONG_SUN_POLY_HPP
