#ifndef QCONG_POLY_HPP
#define QCONG_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qcong/detail/kronecker.hpp"
#include "qcong/int.hpp"

namespace qcong {

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/*
 * Dense univariate polynomial over Int, coefficients stored lowest degree
 * first with no trailing (leading-degree) zeros; the zero polynomial is the
 * empty sequence. The variable name is part of the type so that x- and
 * q-polynomials cannot be mixed by accident.
 */
template <char Var>
class DensePoly {
public:
    static constexpr char variable = Var;

    DensePoly() = default;
    DensePoly(const Int& c) {  // NOLINT: constants promote implicitly
        if (sgn(c) != 0) coeffs_.push_back(c);
    }
    DensePoly(long c) : DensePoly(Int(c)) {}  // NOLINT
    DensePoly(int c) : DensePoly(Int(c)) {}   // NOLINT
    explicit DensePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    DensePoly(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static DensePoly monomial(const Int& c, std::size_t degree) {
        if (sgn(c) == 0) return {};
        std::vector<Int> v(degree + 1);
        v[degree] = c;
        return DensePoly(std::move(v));
    }
    static DensePoly var() { return monomial(Int(1), 1); }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    const Int& leading() const { return coeffs_.back(); }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Int eval(const Int& at) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Sum of coefficients, i.e. the value at 1.
    Int coeff_sum() const {
        Int acc = 0;
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    DensePoly& operator*=(const Int& c) {
        if (sgn(c) == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    DensePoly& operator*=(const DensePoly& o) {
        *this = *this * o;
        return *this;
    }

    /// this += c * o, without temporaries.
    void add_scaled(const DensePoly& o, const Int& c) {
        if (sgn(c) == 0 || o.is_zero()) return;
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            mpz_addmul(coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t(), c.get_mpz_t());
        normalize();
    }

    /// Multiplication by var^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Int> v(k);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return DensePoly(std::move(v));
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator-(DensePoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        return DensePoly(detail::multiply_dense(a.coeffs_, b.coeffs_));
    }
    friend DensePoly operator*(DensePoly a, const Int& c) { return a *= c; }
    friend DensePoly operator*(const Int& c, DensePoly a) { return a *= c; }
    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) { return os << p.to_string(); }

    /// Parses the canonical text form produced by to_string (and tolerates
    /// extra whitespace, repeated degrees and explicit unit coefficients).
    static DensePoly parse(std::string_view text);

private:
    void normalize() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Elements of Z[x].
using XPoly = DensePoly<'x'>;
/// Elements of Z[q]; moduli such as cyclotomic polynomials and q-integers.
using QPoly = DensePoly<'q'>;

template <char Var>
DensePoly<Var> pow(const DensePoly<Var>& base, long e) {
    if (e < 0) throw std::invalid_argument("polynomial pow: negative exponent");
    DensePoly<Var> result(1);
    DensePoly<Var> b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

/// p(c0 + c1*x), expanded by Horner's rule.
template <char Var>
DensePoly<Var> affine_subst(const DensePoly<Var>& p, const Int& c0, const Int& c1) {
    const DensePoly<Var> lin(std::vector<Int>{c0, c1});
    DensePoly<Var> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + DensePoly<Var>(*it);
    return acc;
}

template <char Var>
struct DivMod {
    DensePoly<Var> quotient;
    DensePoly<Var> remainder;
};

/// Division by a monic polynomial; exact over Z.
template <char Var>
DivMod<Var> divmod_monic(const DensePoly<Var>& a, const DensePoly<Var>& m) {
    if (!m.is_monic()) throw std::invalid_argument("divmod_monic: modulus is not monic");
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) return {DensePoly<Var>{}, a};
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(rem.size() - dm);
    for (std::size_t i = rem.size(); i-- > dm;) {
        if (sgn(rem[i]) == 0) continue;
        const Int c = rem[i];
        quot[i - dm] = c;
        for (std::size_t j = 0; j <= dm; ++j)
            mpz_submul(rem[i - dm + j].get_mpz_t(), c.get_mpz_t(), m.coeffs()[j].get_mpz_t());
    }
    rem.resize(dm);
    return {DensePoly<Var>(std::move(quot)), DensePoly<Var>(std::move(rem))};
}

/// Evidence that an exact division over Z failed.
template <char Var>
struct DivisionWitness {
    enum class Kind { obstructed_coefficient, nonzero_remainder };
    Kind kind = Kind::nonzero_remainder;
    /// Degree of the obstructed coefficient (obstructed_coefficient only).
    std::size_t degree = 0;
    /// The coefficient the leading coefficient of the divisor failed to divide.
    Int coefficient;
    /// Partial remainder at the point of failure.
    DensePoly<Var> remainder;

    std::string describe() const {
        if (kind == Kind::obstructed_coefficient) {
            return std::string("obstructed at ") + Var + "^" + std::to_string(degree) + ": coefficient " +
                   coefficient.get_str() + "; remainder " + remainder.to_string();
        }
        return "remainder " + remainder.to_string();
    }
};

/// Exact division p / d in Z[Var]: the quotient when it exists, otherwise
/// the first obstruction met while dividing from the top.
template <char Var>
std::variant<DensePoly<Var>, DivisionWitness<Var>> divexact(const DensePoly<Var>& p, const DensePoly<Var>& d) {
    if (d.is_zero()) throw std::domain_error("divexact: division by the zero polynomial");
    const std::size_t dd = d.size() - 1;
    const Int& lc = d.leading();
    std::vector<Int> rem = p.coeffs();
    std::vector<Int> quot(rem.size() > dd ? rem.size() - dd : 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (sgn(rem[i]) == 0) continue;
        if (!divides(lc, rem[i])) {
            DivisionWitness<Var> w;
            w.kind = DivisionWitness<Var>::Kind::obstructed_coefficient;
            w.degree = i;
            w.coefficient = rem[i];
            w.remainder = DensePoly<Var>(std::move(rem));
            return w;
        }
        Int c;
        mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[i - dd + j].get_mpz_t(), c.get_mpz_t(), d.coeffs()[j].get_mpz_t());
        quot[i - dd] = std::move(c);
    }
    DensePoly<Var> r(std::move(rem));
    if (!r.is_zero()) {
        DivisionWitness<Var> w;
        w.kind = DivisionWitness<Var>::Kind::nonzero_remainder;
        w.remainder = std::move(r);
        return w;
    }
    return DensePoly<Var>(std::move(quot));
}

/// Exact division by a nonzero integer, or the first indivisible coefficient.
template <char Var>
std::variant<DensePoly<Var>, DivisionWitness<Var>> divexact(const DensePoly<Var>& p, const Int& d) {
    return divexact(p, DensePoly<Var>(d));
}

extern template class DensePoly<'x'>;
extern template class DensePoly<'q'>;

}  // namespace qcong

#endif  // QCONG_POLY_HPP
