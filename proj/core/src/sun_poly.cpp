#include "qcong/sun_poly.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "qcong/arith.hpp"
#include "qcong/detail/memo.hpp"
#include "qcong/q_objects.hpp"

namespace qcong {

namespace {

void require_positive(Exp v, const char* name, const char* where) {
    if (v < 1) throw std::invalid_argument(std::string(where) + ": " + name + " must be >= 1");
}

XPoly x_power(Exp e) { return XPoly::monomial(Int(1), static_cast<std::size_t>(e)); }

/// Multiplies every q-term of a by x^e.
QLaurent times_x_power(const QLaurent& a, Exp e) {
    QLaurent r;
    for (const auto& [qe, c] : a.terms()) r.add_term(qe, c.shifted(static_cast<std::size_t>(e)));
    return r;
}

Exp binom2(Exp j) { return j * (j - 1) / 2; }

QLaurent build_q_w(Exp k, Exp alpha) {
    QLaurent acc;
    for (Exp j = 1; j <= k; ++j) {
        const QPoly base = q_binomial_poly(k - 1, j - 1) * q_binomial_poly(k + j, j) -
                           q_binomial_poly(k, j) * q_binomial_poly(k + j, j - 1);
        const QPoly powered = pow(base, alpha);
        const Exp offset = alpha * (binom2(j + 1) - (k + 1) * (j - 1));
        const XPoly xj = x_power(j - 1);
        const auto& c = powered.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sgn(c[i]) != 0) acc.add_term(offset + static_cast<Exp>(i), xj * c[i]);
    }
    return acc;
}

// j-th term of the reflected form, without the x power.
QLaurent alt_term(Exp k, Exp alpha, Exp j) {
    const QLaurent inner = (q_binomial(k - 1, j - 1) * q_binomial(-k - 1, j)).shifted(k + 1) +
                           q_binomial(k, j) * q_binomial(-k - 2, j - 1);
    QLaurent term = pow(inner, alpha).shifted(alpha * j * j);
    if ((alpha * j) % 2 != 0) term = -term;
    return term;
}

}  // namespace

const XPoly& w_alpha_poly(Exp n, Exp alpha) {
    require_positive(n, "n", "w_alpha_poly");
    require_positive(alpha, "alpha", "w_alpha_poly");
    static detail::MemoTable<std::pair<Exp, Exp>, XPoly> table;
    return table.get_or_compute({n, alpha}, [n, alpha] {
        std::vector<Int> c(static_cast<std::size_t>(n));
        for (Exp k = 1; k <= n; ++k)
            c[static_cast<std::size_t>(k - 1)] = pow_int(w_number(n, k), static_cast<unsigned long>(alpha));
        return XPoly(std::move(c));
    });
}

const XPoly& w_alpha_poly_pow(Exp n, Exp alpha, Exp m) {
    if (m < 0) throw std::invalid_argument("w_alpha_poly_pow: m must be nonnegative");
    static detail::MemoTable<std::tuple<Exp, Exp, Exp>, XPoly> table;
    return table.get_or_compute({n, alpha, m}, [n, alpha, m] { return pow(w_alpha_poly(n, alpha), m); });
}

XPoly schroder_poly(Exp n) {
    require_positive(n, "n", "schroder_poly");
    const XPoly x_plus_one{1, 1};
    XPoly acc;
    for (Exp k = 1; k <= n; ++k)
        acc += x_power(k - 1) * pow(x_plus_one, n - k) * narayana_number(n, k);
    return acc;
}

const QLaurent& q_w_poly(Exp k, Exp alpha) {
    require_positive(k, "k", "q_w_poly");
    require_positive(alpha, "alpha", "q_w_poly");
    static detail::MemoTable<std::pair<Exp, Exp>, QLaurent> table;
    return table.get_or_compute({k, alpha}, [k, alpha] { return build_q_w(k, alpha); });
}

QLaurent q_w_poly_alt(Exp k, Exp alpha) {
    require_positive(k, "k", "q_w_poly_alt");
    require_positive(alpha, "alpha", "q_w_poly_alt");
    if (!alt_term(k, alpha, 0).is_zero() || !alt_term(k, alpha, k + 1).is_zero())
        throw std::logic_error("q_w_poly_alt: summand does not vanish outside 1 <= j <= k");
    QLaurent acc;
    for (Exp j = 1; j <= k; ++j) acc += times_x_power(alt_term(k, alpha, j), j - 1);
    return acc;
}

QLaurent b_poly(const BPolyKey& key) {
    const auto [a, b, d, alpha] = key;
    if (d <= 2) throw std::invalid_argument("b_poly: d must be > 2");
    if (b < 1 || b > d - 2) throw std::invalid_argument("b_poly: b must lie in [1, d-2]");
    if (a < 0) throw std::invalid_argument("b_poly: a must be nonnegative");
    require_positive(alpha, "alpha", "b_poly");

    const Int a_int = to_int(a);
    auto s_weight = [&](Exp s) {
        return pow_int(binomial_general(a_int, s) * binomial_general(-a_int - 1, s), static_cast<unsigned long>(alpha));
    };
    if (sgn(s_weight(-1)) != 0 || sgn(s_weight(a + 1)) != 0)
        throw std::logic_error("b_poly: C(a,s) does not vanish outside 0 <= s <= a");

    // The t-dependent factor (-1)^(alpha t) q^(alpha t^2) (...)^alpha is shared by all s.
    std::vector<QLaurent> t_factor(static_cast<std::size_t>(d));
    for (Exp t = 1; t <= d - 1; ++t) {
        const QLaurent inner = (q_binomial(b - 1, t - 1) * q_binomial(d - b - 1, t)).shifted(b + 1) +
                               q_binomial(b, t) * q_binomial(d - b - 2, t - 1);
        QLaurent f = pow(inner, alpha).shifted(alpha * t * t);
        if ((alpha * t) % 2 != 0) f = -f;
        t_factor[static_cast<std::size_t>(t)] = std::move(f);
    }

    QLaurent acc;
    for (Exp s = 0; s <= a; ++s) {
        Int w = s_weight(s);
        if ((alpha * s * d) % 2 != 0) w = -w;
        for (Exp t = 1; t <= d - 1; ++t) {
            const QLaurent& f = t_factor[static_cast<std::size_t>(t)];
            if (f.is_zero()) continue;
            acc += times_x_power(f * w, s * d + t - 1);
        }
    }
    return acc;
}

std::vector<Verdict> lemma_congruence_check(Exp a, Exp b, Exp d, Exp alpha) {
    if (a < 0) throw std::invalid_argument("lemma_congruence_check: a must be nonnegative");
    require_positive(alpha, "alpha", "lemma_congruence_check");
    const bool base_domain = d > 2 && b >= 1 && b <= d - 2;
    const bool shifted_domain = d > 3 && b >= 0 && b <= d - 3;
    if (!base_domain && !shifted_domain)
        throw std::invalid_argument("lemma_congruence_check: (b, d) = (" + std::to_string(b) + ", " +
                                    std::to_string(d) + ") is outside both congruence domains");

    const QPoly& phi = cyclotomic(d);
    std::vector<Verdict> out;
    auto check = [&](const char* statement, Exp index, const QLaurent& rhs) {
        Stopwatch clock;
        Verdict v;
        v.statement = statement;
        v.params = {{"a", a}, {"b", b}, {"d", d}, {"alpha", alpha}};
        const QLaurent rem = rem_monic(q_w_poly(index, alpha) - rhs, phi);
        v.pass = rem.is_zero();
        if (!v.pass) v.witness = rem.to_string();
        v.elapsed = clock.elapsed();
        out.push_back(std::move(v));
    };

    if (base_domain) {
        const QLaurent bp = b_poly({a, b, d, alpha});
        check("lemma-23:w[ad+b]", a * d + b, bp);
        check("lemma-23:w[ad+d-b-1]", a * d + d - b - 1, bp.shifted(-alpha * (2 * b + 1)));
    }
    if (shifted_domain) {
        const QLaurent bp = b_poly({a, b + 1, d, alpha});
        check("lemma-23:w[ad+b+1]", a * d + b + 1, bp);
        check("lemma-23:w[ad+d-b-2]", a * d + d - b - 2, bp.shifted(-alpha * (2 * b + 3)));
    }
    return out;
}

}  // namespace qcong
