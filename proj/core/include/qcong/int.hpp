#ifndef QCONG_INT_HPP
#define QCONG_INT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qcong {

/// Arbitrary-precision signed integer used for every coefficient.
using Int = mpz_class;

/// Exponent of q in a Laurent polynomial; also used for small indices.
using Exp = std::int64_t;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int to_int(Exp v) {
    Int r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool divides(const Int& d, const Int& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace qcong

#endif  // QCONG_INT_HPP
