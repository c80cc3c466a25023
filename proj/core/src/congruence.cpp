#include "qcong/congruence.hpp"

#include <stdexcept>
#include <string>
#include <variant>

#include "qcong/arith.hpp"
#include "qcong/q_objects.hpp"
#include "qcong/sun_poly.hpp"

namespace qcong {

namespace {

void require_positive(std::initializer_list<std::pair<const char*, Exp>> values, const char* where) {
    for (const auto& [name, v] : values)
        if (v < 1) throw std::invalid_argument(std::string(where) + ": " + name + " must be >= 1");
}

/// a * [v]^r with [v] taken at q^step; v >= 1.
QLaurent times_q_integer_power(QLaurent a, const Int& v, Exp r, Exp step = 1) {
    if (!v.fits_slong_p()) throw std::overflow_error("q-integer argument too large");
    for (Exp i = 0; i < r; ++i) a = times_geometric(a, v.get_si(), step);
    return a;
}

Verdict divisibility_verdict(const char* statement, std::vector<std::pair<std::string, Exp>> params,
                             const QLaurent& sum, const QPoly& modulus) {
    Verdict v;
    v.statement = statement;
    v.params = std::move(params);
    const QLaurent rem = rem_monic(sum, modulus);
    v.pass = rem.is_zero();
    if (!v.pass) v.witness = rem.to_string();
    return v;
}

/// Divides p by the integer den; on failure records the obstruction in v.
bool integral_quotient(const XPoly& p, const Int& den, Verdict& v, XPoly* quotient = nullptr) {
    auto res = divexact(p, den);
    if (auto* w = std::get_if<DivisionWitness<'x'>>(&res)) {
        v.pass = false;
        v.witness = "not divisible by " + den.get_str() + ": " + w->describe();
        return false;
    }
    if (quotient) *quotient = std::get<XPoly>(std::move(res));
    return true;
}

Int gcd2(Exp n) { return n % 2 == 0 ? Int(2) : Int(1); }

Int triple(Exp n) { return to_int(n) * (n + 1) * (n + 2); }

}  // namespace

QLaurent qsum_plain(Exp n, Exp alpha, Exp m, Exp r) {
    require_positive({{"n", n}, {"alpha", alpha}, {"m", m}, {"r", r}}, "qsum_plain");
    QLaurent acc;
    for (Exp k = 1; k <= n - 1; ++k) {
        QLaurent term = times_q_integer_power(pow(q_w_poly(k, alpha), m), to_int(k * (k + 1)), r);
        term = times_geometric(term, 2 * k + 1);
        acc += term.shifted((n - 1 - k) * (alpha * m + 1));
    }
    return acc;
}

QLaurent qsum_alternating(Exp n, Exp alpha, Exp m, Exp r) {
    require_positive({{"n", n}, {"alpha", alpha}, {"m", m}, {"r", r}}, "qsum_alternating");
    QLaurent acc;
    for (Exp k = 1; k <= n - 1; ++k) {
        // [k(k+1)]_{q^2}^r [2k+1] w_k(x; q^2)^m
        QLaurent term = pow(q_w_poly(k, alpha).subst_q_squared(), m);
        term = times_q_integer_power(std::move(term), to_int(k * (k + 1)), r, 2);
        term = times_geometric(term, 2 * k + 1).shifted((n - 1 - k) * (2 * alpha * m + 1));
        if (k % 2 != 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

QLaurent qsum_product(Exp n, Exp alpha, Exp m, Exp r) {
    require_positive({{"n", n}, {"alpha", alpha}, {"m", m}, {"r", r}}, "qsum_product");
    QLaurent acc;
    for (Exp k = 1; k <= n - 1; ++k) {
        QLaurent term = pow(q_w_poly(k, alpha) * q_w_poly(k + 1, alpha), m);
        term = times_q_integer_power(std::move(term), to_int(k * (k + 2)), r);
        term = times_geometric(term, 2 * (k + 1));
        acc += term.shifted((n - 2 - k) * (2 * alpha * m + 1));
    }
    return acc;
}

QLaurent qsum_general(Exp n, Exp alpha, Exp beta, Exp m, Exp r) {
    require_positive({{"n", n}, {"alpha", alpha}, {"beta", beta}, {"m", m}, {"r", r}}, "qsum_general");
    QLaurent acc;
    for (Exp k = 1; k <= n - 1; ++k) {
        const Int bracket = rising_factorial(to_int(k), beta) * rising_factorial(to_int(k + beta + 1), beta);
        QLaurent block(1);
        for (Exp i = 0; i < 2 * beta; ++i) block *= q_w_poly(k + i, alpha);
        QLaurent term = times_q_integer_power(pow(block, m), bracket, r);
        term = times_geometric(term, 2 * (k + beta));
        acc += term.shifted((n - 2 * beta - k) * (2 * beta * alpha * m + 1));
    }
    return acc;
}

Verdict verify_divisible_by_qn(const QLaurent& sum, Exp n) {
    if (n < 2) throw std::invalid_argument("verify_divisible_by_qn: n must be >= 2");
    Stopwatch clock;
    Verdict v = divisibility_verdict("divisible-by-[n]", {{"n", n}}, sum, q_integer_poly(n));
    v.elapsed = clock.elapsed();
    return v;
}

std::vector<FactorCheck> cyclotomic_product_factors(const QLaurent& sum, Exp n) {
    if (n < 2) throw std::invalid_argument("cyclotomic_product_factors: n must be >= 2");
    std::vector<FactorCheck> out;
    for (Exp d : divisors(n)) {
        if (d == 1) continue;
        const QPoly& modulus = d % 2 != 0 ? cyclotomic(d) : cyclotomic(2 * d);
        out.push_back({d, modulus, divmod_monic(sum, modulus)});
    }
    return out;
}

Verdict verify_cyclotomic_product(const QLaurent& sum, Exp n) {
    Stopwatch clock;
    Verdict v;
    v.statement = "divisible-by-cyclotomic-product";
    v.params = {{"n", n}};
    v.pass = true;
    std::string witness;
    for (const auto& f : cyclotomic_product_factors(sum, n)) {
        if (f.division.remainder.is_zero()) continue;
        v.pass = false;
        if (!witness.empty()) witness += "; ";
        witness += (f.divisor % 2 != 0 ? "mod Phi_" + std::to_string(f.divisor) + "(q)"
                                       : "mod Phi_" + std::to_string(f.divisor) + "(q^2)") +
                   ": " + f.division.remainder.to_string();
    }
    if (!v.pass) v.witness = witness;
    v.elapsed = clock.elapsed();
    return v;
}

XPoly int_sum_plain_numerator(Exp n, Exp alpha, Exp m, Exp r, Sign sign) {
    require_positive({{"n", n}, {"alpha", alpha}, {"m", m}, {"r", r}}, "int_sum_plain");
    XPoly acc;
    for (Exp k = 1; k <= n; ++k) {
        Int c = pow_int(to_int(k) * (k + 1), static_cast<unsigned long>(r)) * (2 * k + 1);
        if (sign == Sign::alternating && k % 2 != 0) c = -c;
        acc.add_scaled(w_alpha_poly_pow(k, alpha, m), c);
    }
    return acc;
}

Verdict int_sum_plain(Exp n, Exp alpha, Exp m, Exp r, Sign sign) {
    Stopwatch clock;
    Verdict v;
    v.statement = sign == Sign::plus ? "thm-int-plain" : "thm-int-alternating";
    v.params = {{"n", n}, {"alpha", alpha}, {"m", m}, {"r", r}};
    const XPoly numerator = int_sum_plain_numerator(n, alpha, m, r, sign) * gcd2(n);
    v.pass = integral_quotient(numerator, triple(n), v);
    v.elapsed = clock.elapsed();
    return v;
}

XPoly int_sum_lcm_numerator(Exp n, Exp alpha, Exp beta, Exp m, Exp r) {
    require_positive({{"n", n}, {"alpha", alpha}, {"beta", beta}, {"m", m}, {"r", r}}, "int_sum_lcm");
    XPoly acc;
    for (Exp k = 1; k <= n; ++k) {
        const Int c = pow_int(rising_factorial(to_int(k), beta), static_cast<unsigned long>(r)) *
                      pow_int(rising_factorial(to_int(k + beta + 1), beta), static_cast<unsigned long>(r)) *
                      (k + beta);
        XPoly block(1);
        for (Exp i = 0; i < 2 * beta; ++i) block *= w_alpha_poly_pow(k + i, alpha, m);
        acc.add_scaled(block, c);
    }
    return acc;
}

Verdict int_sum_lcm(Exp n, Exp alpha, Exp beta, Exp m, Exp r) {
    Stopwatch clock;
    Verdict v;
    v.statement = "thm-int-lcm";
    v.params = {{"n", n}, {"alpha", alpha}, {"beta", beta}, {"m", m}, {"r", r}};
    const XPoly numerator = int_sum_lcm_numerator(n, alpha, beta, m, r) * Int(2);
    v.pass = integral_quotient(numerator, lcm_range(n, n + 2 * beta + 1), v);
    v.elapsed = clock.elapsed();
    return v;
}

Verdict conjecture_check(ConjectureVariant variant, Exp n, Exp alpha, Exp m) {
    require_positive({{"n", n}, {"alpha", alpha}, {"m", m}}, "conjecture_check");
    Stopwatch clock;
    Verdict v;
    v.status = Status::conjecture_empirical;
    v.pass = true;

    // Sum of k(k+1)(k+2) (w_k w_{k+1})^m over k = 1..n.
    auto product_sum = [n](Exp power) {
        XPoly acc;
        for (Exp k = 1; k <= n; ++k)
            acc.add_scaled(w_alpha_poly_pow(k, 1, power) * w_alpha_poly_pow(k + 1, 1, power),
                           to_int(k) * (k + 1) * (k + 2));
        return acc;
    };
    // Divides by (2x+1)^power, then by the integer denominator.
    auto check_quotient = [&v](const XPoly& numerator, Exp power, const Int& den) {
        auto res = divexact(numerator, pow(XPoly{1, 2}, power));
        if (auto* w = std::get_if<DivisionWitness<'x'>>(&res)) {
            v.pass = false;
            v.witness = "not divisible by (2x+1)^" + std::to_string(power) + ": " + w->describe();
            return;
        }
        v.pass = integral_quotient(std::get<XPoly>(res), den, v);
    };

    switch (variant) {
        case ConjectureVariant::c52_eq14_even_n: {
            if (alpha <= 1) throw std::invalid_argument("conj-52-even: alpha must be > 1");
            v.statement = "conj-52-even";
            v.params = {{"n", n}, {"alpha", alpha}, {"m", m}};
            const XPoly numerator = int_sum_plain_numerator(n, alpha, m, 1, Sign::alternating);
            v.pass = integral_quotient(numerator, triple(n), v);
            break;
        }
        case ConjectureVariant::c54_ii: {
            if (alpha != 1) throw std::invalid_argument("conj-54-ii: defined for alpha = 1 only");
            v.statement = "conj-54-ii";
            v.params = {{"n", n}, {"m", m}};
            check_quotient(product_sum(m) * (Int(2) * gcd2(n)), m, triple(n));
            break;
        }
        case ConjectureVariant::c54_iii: {
            if (n % 2 != 0) throw std::invalid_argument("conj-54-iii: n must be even");
            if (alpha != 1 || m != 1) throw std::invalid_argument("conj-54-iii: defined for alpha = m = 1 only");
            v.statement = "conj-54-iii";
            v.params = {{"n", n}};
            check_quotient(product_sum(1) * Int(4), 3, triple(n));
            break;
        }
    }
    v.elapsed = clock.elapsed();
    return v;
}

}  // namespace qcong
