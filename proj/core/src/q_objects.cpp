#include "qcong/q_objects.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcong/arith.hpp"

namespace qcong {

QPoly q_integer_poly(Exp n) {
    if (n < 1) throw std::invalid_argument("q_integer_poly: n must be positive");
    return QPoly(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

QLaurent q_integer(Exp n) {
    QLaurent r;
    if (n > 0) {
        for (Exp i = 0; i < n; ++i) r.add_term(i, XPoly(1));
    } else {
        for (Exp i = n; i < 0; ++i) r.add_term(i, XPoly(-1));
    }
    return r;
}

namespace {

// qbinom(n, k) = qbinom(n, k-1) * [n-k+1] / [k], each step exact.
QPoly gaussian_binomial(Exp n, Exp k) {
    QPoly acc(1);
    for (Exp j = 1; j <= k; ++j) {
        acc *= q_integer_poly(n - j + 1);
        auto [quot, rem] = divmod_monic(acc, q_integer_poly(j));
        if (!rem.is_zero()) throw std::logic_error("gaussian_binomial: inexact step");
        acc = std::move(quot);
    }
    return acc;
}

detail::MemoTable<std::pair<Exp, Exp>, QPoly>& binomial_table() {
    static detail::MemoTable<std::pair<Exp, Exp>, QPoly> table;
    return table;
}

}  // namespace

const QPoly& q_binomial_poly(Exp n, Exp k) {
    if (k < 0 || n < k) throw std::invalid_argument("q_binomial_poly: need 0 <= k <= n");
    k = std::min(k, n - k);
    return binomial_table().get_or_compute({n, k}, [n, k] { return gaussian_binomial(n, k); });
}

QLaurent q_binomial(Exp n, Exp k) {
    if (k < 0) return {};
    if (n >= 0) {
        if (k > n) return {};
        return QLaurent(q_binomial_poly(n, k));
    }
    const Exp a = -n;
    QLaurent r = QLaurent(q_binomial_poly(a + k - 1, k)).shifted(-a * k - k * (k - 1) / 2);
    if (k % 2 != 0) r = -r;
    return r;
}

CyclotomicCache& CyclotomicCache::global() {
    static CyclotomicCache cache;
    return cache;
}

const QPoly& CyclotomicCache::get(Exp d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic: d must be positive, got " + std::to_string(d));
    return table_.get_or_compute(d, [d] {
        QPoly num(1), den(1);
        for (Exp e : divisors(d)) {
            const int mu = mobius(d / e);
            if (mu == 0) continue;
            const QPoly factor = QPoly::monomial(Int(1), static_cast<std::size_t>(e)) - QPoly(1);
            (mu > 0 ? num : den) *= factor;
        }
        auto [quot, rem] = divmod_monic(num, den);
        if (!rem.is_zero()) throw std::logic_error("cyclotomic: Moebius product is not exact");
        return quot;
    });
}

const QPoly& cyclotomic(Exp d) { return CyclotomicCache::global().get(d); }

QPoly subst_q_squared(const QPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Int> v(2 * p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) v[2 * i] = p.coeffs()[i];
    return QPoly(std::move(v));
}

bool qint_factorization_check(Exp n) {
    if (n < 2) throw std::invalid_argument("qint_factorization_check: n must be >= 2");
    QPoly prod(1);
    for (Exp d : divisors(n))
        if (d > 1) prod *= cyclotomic(d);
    return prod == q_integer_poly(n);
}

bool q_lucas_check(Exp d, Exp a, Exp b, Exp s, Exp t) {
    if (d <= 1) throw std::invalid_argument("q_lucas_check: d must be > 1");
    if (b < 0 || b > d - 1 || t < 0 || t > d - 1)
        throw std::invalid_argument("q_lucas_check: b and t must lie in [0, d-1]");
    if (a < 0 || s < 0) throw std::invalid_argument("q_lucas_check: a and s must be nonnegative");
    const QPoly& phi = cyclotomic(d);
    const QLaurent lhs = q_binomial(a * d + b, s * d + t);
    const QLaurent rhs = q_binomial(b, t) * binomial_general(to_int(a), s);
    return rem_monic(lhs, phi) == rem_monic(rhs, phi);
}

bool lemma31_check(Exp d) {
    if (d <= 1) throw std::invalid_argument("lemma31_check: d must be > 1");
    const QPoly squared = subst_q_squared(cyclotomic(d));
    if (d % 2 != 0) return divmod_monic(squared, cyclotomic(d)).remainder.is_zero();
    return squared == cyclotomic(2 * d);
}

}  // namespace qcong
