// Canonical text forms for XPoly, QPoly and QLaurent.
//
//   poly    := "0" | term ((" + " | " - ") term)*      (first term may carry "-")
//   term    := INT | [INT "*"] VAR ["^" INT]             (ascending degree)
//   laurent := "0" | group (" + " group)*
//   group   := "q^" SIGNED_INT "*(" poly ")"            (ascending q-exponent)

#include <cctype>
#include <stdexcept>
#include <string>

#include "qcong/poly.hpp"
#include "qcong/qlaurent.hpp"

namespace qcong {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }
    long small_int() {
        bool neg = accept('-');
        const std::string d = digits();
        if (d.size() > 17) fail("exponent too large");
        const long v = std::stol(d);
        return neg ? -v : v;
    }
    std::size_t pos() const { return pos_; }
    std::string_view rest() const { return s_.substr(pos_); }
    void advance(std::size_t n) { pos_ += n; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                                    std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <char Var>
DensePoly<Var> parse_poly(Cursor& cur) {
    std::vector<Int> coeffs;
    bool first = true;
    while (true) {
        const char c = cur.peek();
        if (c == '\0' || c == ')') break;
        bool neg = false;
        if (c == '+' || c == '-') {
            cur.advance(1);
            neg = c == '-';
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        Int coef(1);
        std::size_t degree = 0;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = Int(cur.digits());
            if (cur.accept('*')) {
                if (!cur.accept(Var)) cur.fail(std::string("expected variable ") + Var);
                degree = 1;
                if (cur.accept('^')) degree = std::stoul(cur.digits());
            }
        } else if (cur.accept(Var)) {
            degree = 1;
            if (cur.accept('^')) degree = std::stoul(cur.digits());
        } else {
            cur.fail("expected a term");
        }
        if (neg) coef = -coef;
        if (coeffs.size() <= degree) coeffs.resize(degree + 1);
        coeffs[degree] += coef;
    }
    if (first) cur.fail("empty polynomial");
    return DensePoly<Var>(std::move(coeffs));
}

}  // namespace

template <char Var>
std::string DensePoly<Var>::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const Int mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += Var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <char Var>
DensePoly<Var> DensePoly<Var>::parse(std::string_view text) {
    Cursor cur(text);
    DensePoly<Var> p = parse_poly<Var>(cur);
    if (!cur.done()) cur.fail("trailing input");
    return p;
}

template class DensePoly<'x'>;
template class DensePoly<'q'>;

std::string QLaurent::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "q^" + std::to_string(e) + "*(" + c.to_string() + ")";
    }
    return out;
}

QLaurent QLaurent::parse(std::string_view text) {
    Cursor cur(text);
    QLaurent r;
    if (cur.peek() == '0') {
        cur.advance(1);
        if (!cur.done()) cur.fail("trailing input after 0");
        return r;
    }
    bool first = true;
    while (!cur.done()) {
        if (!first) cur.expect('+');
        first = false;
        cur.expect('q');
        cur.expect('^');
        const Exp e = cur.small_int();
        cur.expect('*');
        cur.expect('(');
        XPoly c = parse_poly<'x'>(cur);
        cur.expect(')');
        r.add_term(e, c);
    }
    if (first) cur.fail("empty Laurent polynomial");
    return r;
}

}  // namespace qcong
