#ifndef QCONG_Q_OBJECTS_HPP
#define QCONG_Q_OBJECTS_HPP

#include "qcong/detail/memo.hpp"
#include "qcong/qlaurent.hpp"

namespace qcong {

/// q-integer [n] = (1 - q^n)/(1 - q). Zero for n = 0; for n < 0 it is
/// -q^n - ... - q^-1.
QLaurent q_integer(Exp n);

/// [n] as a q-polynomial for n >= 1; the modulus form.
QPoly q_integer_poly(Exp n);

/// Gaussian binomial coefficient. Zero for k < 0 and for 0 <= n < k;
/// negative tops use qbinom(-a, k) = (-1)^k q^(-ak - C(k,2)) qbinom(a+k-1, k).
QLaurent q_binomial(Exp n, Exp k);

/// Gaussian binomial for 0 <= k <= n as a q-polynomial; memoized.
const QPoly& q_binomial_poly(Exp n, Exp k);

/// Memo of cyclotomic polynomials, built by the Moebius product
/// Phi_d(q) = prod_{e | d} (q^e - 1)^mu(d/e) with exact division.
class CyclotomicCache {
public:
    const QPoly& get(Exp d);
    std::size_t size() const { return table_.size(); }

    static CyclotomicCache& global();

private:
    detail::MemoTable<Exp, QPoly> table_;
};

/// Phi_d(q) from the process-wide cache; throws for d <= 0.
const QPoly& cyclotomic(Exp d);

/// Substitutes q -> q^2 in a q-polynomial.
QPoly subst_q_squared(const QPoly& p);

/// Whether the product of Phi_d over divisors d > 1 of n equals [n]; n >= 2.
bool qint_factorization_check(Exp n);

/// q-Lucas: qbinom(ad+b, sd+t) and C(a,s) qbinom(b,t) have equal remainders
/// mod Phi_d(q). Requires d > 1, a, s >= 0 and 0 <= b, t <= d-1.
bool q_lucas_check(Exp d, Exp a, Exp b, Exp s, Exp t);

/// Odd d > 1: Phi_d(q) divides Phi_d(q^2). Even d: Phi_d(q^2) = Phi_{2d}(q).
bool lemma31_check(Exp d);

}  // namespace qcong

#endif  // QCONG_Q_OBJECTS_HPP
