#include "qcong/qlaurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qcong {

QLaurent::QLaurent(const QPoly& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) terms_.emplace(static_cast<Exp>(i), XPoly(c[i]));
}

QLaurent QLaurent::monomial(Exp e, const XPoly& c) {
    QLaurent r;
    if (!c.is_zero()) r.terms_.emplace(e, c);
    return r;
}

long QLaurent::x_degree() const {
    long d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, c.degree());
    return d;
}

XPoly QLaurent::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? XPoly{} : it->second;
}

bool QLaurent::is_x_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.degree() <= 0; });
}

void QLaurent::add_term(Exp e, const XPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
    *this = *this * o;
    return *this;
}

QLaurent& QLaurent::operator*=(const Int& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, p] : terms_) p *= c;
    return *this;
}

QLaurent& QLaurent::operator*=(const XPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, p] : terms_) p *= c;
    return *this;
}

QLaurent QLaurent::shifted(Exp e) const {
    if (e == 0) return *this;
    QLaurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
    return r;
}

QLaurent operator-(QLaurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

QLaurent multiply_naive(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() * b.terms_.size() <= 64 || a.terms_.size() == 1 || b.terms_.size() == 1)
        return multiply_naive(a, b);

    // Flatten both operands into one dense array with a fixed x-stride wide
    // enough for the product's x-degree, then multiply once.
    const Exp a0 = a.min_exp(), b0 = b.min_exp();
    const std::size_t span_a = static_cast<std::size_t>(a.max_exp() - a0) + 1;
    const std::size_t span_b = static_cast<std::size_t>(b.max_exp() - b0) + 1;
    const std::size_t stride = static_cast<std::size_t>(a.x_degree() + b.x_degree()) + 1;

    auto flatten = [stride](const QLaurent& p, Exp base, std::size_t span) {
        std::vector<Int> flat(span * stride);
        for (const auto& [e, c] : p.terms_) {
            const std::size_t off = static_cast<std::size_t>(e - base) * stride;
            std::copy(c.coeffs().begin(), c.coeffs().end(), flat.begin() + static_cast<std::ptrdiff_t>(off));
        }
        return flat;
    };
    const std::vector<Int> fa = flatten(a, a0, span_a);
    const std::vector<Int> fb = flatten(b, b0, span_b);
    std::vector<Int> prod = detail::kronecker_multiply(fa, fb);

    QLaurent r;
    const std::size_t slots = span_a + span_b - 1;
    for (std::size_t t = 0; t < slots; ++t) {
        const std::size_t lo = t * stride;
        const std::size_t hi = std::min(lo + stride, prod.size());
        if (lo >= hi) break;
        std::vector<Int> slice(std::make_move_iterator(prod.begin() + static_cast<std::ptrdiff_t>(lo)),
                               std::make_move_iterator(prod.begin() + static_cast<std::ptrdiff_t>(hi)));
        XPoly c(std::move(slice));
        if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), a0 + b0 + static_cast<Exp>(t), std::move(c));
    }
    return r;
}

QLaurent times_geometric(const QLaurent& a, Exp n, Exp step) {
    if (n < 0 || step < 1) throw std::invalid_argument("times_geometric: need n >= 0 and step >= 1");
    if (a.is_zero() || n == 0) return {};
    const Exp lo = a.min_exp();
    const Exp width = step * n;
    const std::size_t span = static_cast<std::size_t>(a.max_exp() - lo + width - step) + 1;
    std::vector<const XPoly*> in(span, nullptr);
    for (const auto& [e, c] : a.terms()) in[static_cast<std::size_t>(e - lo)] = &c;

    const std::size_t s = static_cast<std::size_t>(step), w = static_cast<std::size_t>(width);
    std::vector<XPoly> out(span);
    for (std::size_t i = 0; i < span; ++i) {
        if (i >= s) out[i] = out[i - s];
        if (in[i]) out[i] += *in[i];
        if (i >= w && in[i - w]) out[i] -= *in[i - w];
    }
    QLaurent r;
    for (std::size_t i = 0; i < span; ++i)
        if (!out[i].is_zero()) r.add_term(lo + static_cast<Exp>(i), out[i]);
    return r;
}

QLaurent pow(const QLaurent& base, long e) {
    if (e < 0) throw std::invalid_argument("QLaurent pow: negative exponent");
    QLaurent result(1);
    QLaurent b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

QLaurent QLaurent::subst_q_squared() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), 2 * e, c);
    return r;
}

XPoly QLaurent::eval_q_one() const {
    XPoly acc;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

LaurentDivMod divmod_monic(const QLaurent& a, const QPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("divmod_monic: modulus must have q-degree >= 1");
    if (!m.is_monic()) throw std::invalid_argument("divmod_monic: modulus is not monic in q");
    if (abs(m.coeffs().front()) != 1)
        throw std::invalid_argument("divmod_monic: modulus constant term must be 1 or -1");

    LaurentDivMod out;
    if (a.is_zero()) return out;
    out.shift = std::max<Exp>(0, -a.min_exp());
    const std::size_t dm = static_cast<std::size_t>(m.degree());
    const std::size_t top = static_cast<std::size_t>(a.max_exp() + out.shift);

    std::vector<XPoly> rem(top + 1);
    for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e + out.shift)] = c;

    std::vector<std::pair<std::size_t, Int>> mod_terms;  // nonzero terms below the leading one
    for (std::size_t j = 0; j < dm; ++j)
        if (sgn(m.coeffs()[j]) != 0) mod_terms.emplace_back(j, -m.coeffs()[j]);

    for (std::size_t i = top + 1; i-- > dm;) {
        if (rem[i].is_zero()) continue;
        XPoly c = std::move(rem[i]);
        rem[i] = XPoly{};
        const std::size_t base = i - dm;
        for (const auto& [j, neg_mj] : mod_terms) rem[base + j].add_scaled(c, neg_mj);
        out.quotient.add_term(static_cast<Exp>(base), c);
    }
    for (std::size_t i = 0; i < std::min(dm, rem.size()); ++i) out.remainder.add_term(static_cast<Exp>(i), rem[i]);
    return out;
}

QLaurent rem_monic(const QLaurent& a, const QPoly& m) { return divmod_monic(a, m).remainder; }

}  // namespace qcong
