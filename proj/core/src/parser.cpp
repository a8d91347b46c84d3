#include "pv/parser.hpp"

#include <cctype>

namespace pv {
namespace {

struct Parser {
    const OperatorSpec& spec;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v = v + parse_term();
            } else if (c == '-') {
                ++pos;
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    Scalar parse_term() {
        Scalar v = parse_unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v = v * parse_unary();
            } else if (c == '/') {
                size_t at = pos;
                ++pos;
                Scalar d = parse_unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar parse_unary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -parse_unary();
        }
        if (c == '+') {
            ++pos;
            return parse_unary();
        }
        return parse_power();
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (peek() != '^') return base;
        size_t at = pos;
        ++pos;
        long e = parse_int_literal();
        if (e < 0) {
            if (base.is_zero()) throw ParseError("zero to a negative power", at);
            base = base.inv();
            e = -e;
        }
        Scalar r = scalar_from_int(1);
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    long parse_int_literal() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer exponent", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    Scalar parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            return scalar_from_rational(v);
        }
        if (c == 'x') {
            ++pos;
            return scalar_x();
        }
        if (c == 'q') {
            if (!spec.allows_q()) throw ParseError("symbol q is only valid in q_dilation mode", pos);
            ++pos;
            return scalar_q();
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos);
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

namespace {

struct JetParser {
    const OperatorSpec& spec;
    const VarSpace& vs;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    MPoly parse_expr() {
        MPoly v = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v = v + parse_term();
            } else if (c == '-') {
                ++pos;
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    MPoly parse_term() {
        MPoly v = parse_unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v = v * parse_unary();
            } else if (c == '/') {
                size_t at = pos;
                ++pos;
                MPoly d = parse_unary();
                v = v * constant_of(d, at).inv();
            } else {
                return v;
            }
        }
    }

    Scalar constant_of(const MPoly& p, size_t at) {
        if (p.is_zero()) throw ParseError("division by zero", at);
        if (p.total_degree() > 0)
            throw ParseError("cannot divide by a polynomial in jet variables", at);
        return p.lead_coeff();
    }

    MPoly parse_unary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -parse_unary();
        }
        if (c == '+') {
            ++pos;
            return parse_unary();
        }
        return parse_power();
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        if (peek() != '^') return base;
        size_t at = pos;
        ++pos;
        long e = parse_int_literal();
        if (e < 0) {
            base = MPoly::constant(vs, constant_of(base, at).inv());
            e = -e;
        }
        MPoly r = MPoly::constant(vs, scalar_from_int(1));
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    long parse_int_literal() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer exponent", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    MPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MPoly v = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return v;
        }
        if (c == 'Y') return parse_variable();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'q') {
            // a coefficient atom; reuse the scalar parser on the token
            size_t start = pos;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            } else {
                ++pos;
            }
            return MPoly::constant(vs, parse_ratfunc(spec, s.substr(start, pos - start)));
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos);
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    MPoly parse_variable() {
        size_t at = pos;
        ++pos;  // consume 'Y'
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected jet order after 'Y'", pos);
        unsigned j = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            j = j * 10 + (s[pos++] - '0');
        if (pos >= s.size() || s[pos] != '_')
            throw ParseError("expected '_' in jet variable (syntax Yj_ab)", pos);
        ++pos;
        if (pos + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])) ||
            !std::isdigit(static_cast<unsigned char>(s[pos + 1])))
            throw ParseError("expected row and column digits (syntax Yj_ab)", pos);
        unsigned a = s[pos++] - '0';
        unsigned b = s[pos++] - '0';
        if (j > vs.order || a < 1 || a > vs.dim || b < 1 || b > vs.dim)
            throw ParseError("jet variable out of range", at);
        return MPoly::variable(vs, vs.id(j, a - 1, b - 1));
    }
};

}  // namespace

MPoly parse_jetpoly(const OperatorSpec& spec, const VarSpace& vs, const std::string& text) {
    JetParser p{spec, vs, text};
    MPoly v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return v;
}

Scalar parse_ratfunc(const OperatorSpec& spec, const std::string& text) {
    Parser p{spec, text};
    try {
        Scalar v = p.parse_expr();
        p.skip_ws();
        if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
        return v;
    } catch (const std::domain_error& e) {
        // zero denominators surfacing from RatFunc arithmetic
        throw ParseError(e.what(), p.pos);
    }
}

}  // namespace pv
