#include "qcong/arith.hpp"

#include <stdexcept>
#include <string>

namespace qcong {

namespace {

void require_index(Exp n, Exp k, const char* what) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument(std::string(what) + ": need 1 <= k <= n, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
}

Int exact_div(const Int& num, const Int& den, const char* what) {
    if (!divides(den, num)) throw std::logic_error(std::string(what) + ": inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int factorial(Exp k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Int binomial_general(const Int& n, Exp k) {
    if (k < 0) return 0;
    Int num = 1;
    for (Exp i = 0; i < k; ++i) num *= n - i;
    return exact_div(num, factorial(k), "binomial_general");
}

int mobius(Exp n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int mu = 1;
    for (Exp p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<Exp> divisors(Exp n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<Exp> low, high;
    for (Exp d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Int lcm_range(Exp lo, Exp hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("lcm_range: need 1 <= lo <= hi");
    Int acc = 1;
    for (Exp i = lo; i <= hi; ++i) acc = lcm(acc, to_int(i));
    return acc;
}

Int rising_factorial(const Int& x0, Exp n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: n must be nonnegative");
    Int acc = 1;
    for (Exp i = 0; i < n; ++i) acc *= x0 + i;
    return acc;
}

Int w_number(Exp n, Exp k) {
    require_index(n, k, "w_number");
    const Int num = binomial_general(to_int(n - 1), k - 1) * binomial_general(to_int(n + k), k - 1);
    return exact_div(num, to_int(k), "w_number");
}

Int w_number_difference_form(Exp n, Exp k) {
    require_index(n, k, "w_number_difference_form");
    return binomial_general(to_int(n - 1), k - 1) * binomial_general(to_int(n + k), k) -
           binomial_general(to_int(n), k) * binomial_general(to_int(n + k), k - 1);
}

Int narayana_number(Exp n, Exp k) {
    require_index(n, k, "narayana_number");
    const Int num = binomial_general(to_int(n), k) * binomial_general(to_int(n), k - 1);
    return exact_div(num, to_int(n), "narayana_number");
}

std::string_view identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::alternating_sum: return "alternating-sum";
        case IdentityId::w_from_narayana: return "w-from-narayana";
        case IdentityId::narayana_from_w: return "narayana-from-w";
        case IdentityId::row_sum_parity: return "row-sum-parity";
    }
    return "unknown";
}

std::vector<IdentityReport> w_identity_suite(Exp n, Exp m, Exp b) {
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("w_identity_suite: need 1 <= m <= n");
    if (b < 0) throw std::invalid_argument("w_identity_suite: b must be nonnegative");

    std::vector<Int> w(static_cast<std::size_t>(n) + 1), nara(static_cast<std::size_t>(n) + 1);
    for (Exp k = 1; k <= n; ++k) {
        w[static_cast<std::size_t>(k)] = w_number(n, k);
        nara[static_cast<std::size_t>(k)] = narayana_number(n, k);
    }
    std::vector<IdentityReport> out;

    {
        Int lhs = 0;
        for (Exp k = m; k <= n; ++k) {
            Int term = binomial_general(to_int(k - 1), m - 1) * w[static_cast<std::size_t>(k)];
            if ((n - k) % 2 != 0) term = -term;
            lhs += term;
        }
        const Int rhs = w[static_cast<std::size_t>(m)];
        out.push_back({IdentityId::alternating_sum, {n, m}, lhs == rhs, lhs, rhs});
    }
    {
        std::vector<Int> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
        for (Exp k = 1; k <= n; ++k) {
            lhs[static_cast<std::size_t>(k - 1)] = w[static_cast<std::size_t>(k)];
            for (Exp j = 1; j <= k; ++j)
                rhs[static_cast<std::size_t>(k - 1)] +=
                    binomial_general(to_int(n - j), k - j) * nara[static_cast<std::size_t>(j)];
        }
        XPoly l(std::move(lhs)), r(std::move(rhs));
        out.push_back({IdentityId::w_from_narayana, {n}, l == r, l, r});
    }
    {
        std::vector<Int> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
        for (Exp k = 1; k <= n; ++k) {
            lhs[static_cast<std::size_t>(k - 1)] = nara[static_cast<std::size_t>(k)];
            for (Exp j = 1; j <= k; ++j) {
                Int term = binomial_general(to_int(n - j), k - j) * w[static_cast<std::size_t>(j)];
                if ((k - j) % 2 != 0) term = -term;
                rhs[static_cast<std::size_t>(k - 1)] += term;
            }
        }
        XPoly l(std::move(lhs)), r(std::move(rhs));
        out.push_back({IdentityId::narayana_from_w, {n}, l == r, l, r});
    }
    {
        Int sum = 0;
        for (Exp k = 0; k <= 2 * b && k + 1 <= n; ++k) sum += w[static_cast<std::size_t>(k + 1)];
        const Int parity = mpz_odd_p(sum.get_mpz_t()) ? 1 : 0;
        out.push_back({IdentityId::row_sum_parity, {n, b}, parity == 1, parity, Int(1)});
    }
    return out;
}

}  // namespace qcong
