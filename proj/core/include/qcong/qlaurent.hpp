#ifndef QCONG_QLAURENT_HPP
#define QCONG_QLAURENT_HPP

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "qcong/poly.hpp"

namespace qcong {

/*
 * Laurent polynomial in q with coefficients in Z[x], i.e. an element of
 * Z[x][q, 1/q]. Sparse in q (exponent -> XPoly), dense in x. Zero
 * coefficients are never stored, so two values are equal iff their term
 * maps are identical.
 */
class QLaurent {
public:
    using Terms = std::map<Exp, XPoly>;

    QLaurent() = default;
    QLaurent(const Int& c) : QLaurent(XPoly(c)) {}  // NOLINT
    QLaurent(long c) : QLaurent(XPoly(c)) {}        // NOLINT
    QLaurent(int c) : QLaurent(XPoly(c)) {}         // NOLINT
    QLaurent(const XPoly& c) {                      // NOLINT
        if (!c.is_zero()) terms_.emplace(0, c);
    }
    QLaurent(const QPoly& p);  // NOLINT

    static QLaurent monomial(Exp e, const XPoly& c = XPoly(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Smallest / largest q-exponent; 0 for the zero value.
    Exp min_exp() const { return is_zero() ? 0 : terms_.begin()->first; }
    Exp max_exp() const { return is_zero() ? 0 : terms_.rbegin()->first; }
    /// Largest x-degree over all coefficients (kZeroDegree for zero).
    long x_degree() const;
    XPoly coeff(Exp e) const;

    /// True iff every coefficient is a constant (no x).
    bool is_x_free() const;
    /// True iff no negative q-exponent occurs.
    bool is_polynomial() const { return is_zero() || min_exp() >= 0; }

    /// Adds c*q^e in place.
    void add_term(Exp e, const XPoly& c);

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    QLaurent& operator*=(const Int& c);
    QLaurent& operator*=(const XPoly& c);

    /// Multiplication by q^e for any sign of e.
    QLaurent shifted(Exp e) const;

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator-(QLaurent a);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(QLaurent a, const Int& c) { return a *= c; }
    friend QLaurent operator*(const Int& c, QLaurent a) { return a *= c; }
    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    /// q -> q^2.
    QLaurent subst_q_squared() const;
    /// q -> 1.
    XPoly eval_q_one() const;

    /// Canonical text, e.g. "q^-1*(1 + 2*x) + q^3*(5)"; "0" for zero.
    std::string to_string() const;
    static QLaurent parse(std::string_view text);
    friend std::ostream& operator<<(std::ostream& os, const QLaurent& a) { return os << a.to_string(); }

private:
    Terms terms_;
};

QLaurent pow(const QLaurent& base, long e);

/// Reference product by term-by-term expansion; used to cross-check the
/// packed multiplication.
QLaurent multiply_naive(const QLaurent& a, const QLaurent& b);

/// a * (1 + q^step + ... + q^(step*(n-1))), i.e. a * [n] evaluated at q^step,
/// computed as a running window sum instead of a full product. n >= 0, step >= 1.
QLaurent times_geometric(const QLaurent& a, Exp n, Exp step = 1);

/// Result of reducing a Laurent polynomial modulo a monic q-polynomial m
/// with unit constant term: q^shift * input = quotient * m + remainder,
/// with shift = max(0, -min_exp(input)), quotient a polynomial in q and
/// remainder of q-degree below deg(m).
struct LaurentDivMod {
    Exp shift = 0;
    QLaurent quotient;
    QLaurent remainder;
};

LaurentDivMod divmod_monic(const QLaurent& a, const QPoly& m);

/// Remainder part of divmod_monic; zero iff m divides a in Z[x][q, 1/q].
QLaurent rem_monic(const QLaurent& a, const QPoly& m);

}  // namespace qcong

#endif  // QCONG_QLAURENT_HPP
