#include "pv/scalar.hpp"

#include <sstream>
#include <utility>

namespace pv {
namespace {

Rational eval_qpoly(const Poly<Rational>& p, const Rational& c) {
    Rational v = 0;
    for (int k = p.degree(); k >= 0; --k) v = v * c + p.coeff(k);
    return v;
}

// q -> c on a Q(q)-coefficient polynomial; false if c hits a pole or kills
// the leading coefficient (either would invalidate the gcd bound).
bool specialize_at(const Poly<QRat>& p, const Rational& c, Poly<Rational>* out) {
    std::vector<Rational> coeffs(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        const QRat& x = p.coeff(static_cast<unsigned>(k));
        Rational den = eval_qpoly(x.den(), c);
        if (den == 0) return false;
        coeffs[static_cast<size_t>(k)] = eval_qpoly(x.num(), c) / den;
    }
    if (coeffs.back() == 0) return false;
    *out = Poly<Rational>(std::move(coeffs));
    return true;
}

// --- gcd over Q(q)[x] via subresultant PRS over Q[q][x] ---
//
// Coefficients are kept as polynomials in q (denominators cleared) and the
// Collins subresultant sequence bounds their degree growth linearly; naive
// fraction-field Euclid blows up exponentially here.

using PQ = Poly<Rational>;
using VP = std::vector<PQ>;  // x-coefficient list, index = power of x

int vp_deg(const VP& v) { return static_cast<int>(v.size()) - 1; }

void vp_trim(VP& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

VP vp_mul(const VP& v, const PQ& c) {
    VP r = v;
    for (auto& x : r) x = x * c;
    return r;
}

PQ exact_div(const PQ& a, const PQ& b) { return PQ::divrem(a, b).first; }

VP vp_div(const VP& v, const PQ& c) {
    VP r = v;
    for (auto& x : r) x = exact_div(x, c);
    return r;
}

// pseudo-remainder lc(v)^(delta+1) * u mod v, delta = deg u - deg v
VP prem(VP u, const VP& v) {
    const PQ& d = v.back();
    int delta = vp_deg(u) - vp_deg(v);
    int steps = 0;
    while (!u.empty() && vp_deg(u) >= vp_deg(v)) {
        PQ lu = u.back();
        int shift = vp_deg(u) - vp_deg(v);
        u = vp_mul(u, d);
        for (size_t i = 0; i < v.size(); ++i)
            u[static_cast<size_t>(shift) + i] = u[static_cast<size_t>(shift) + i] - v[i] * lu;
        vp_trim(u);
        ++steps;
    }
    for (int k = steps; k <= delta; ++k) u = vp_mul(u, d);
    return u;
}

PQ vp_content(const VP& v) {
    PQ g;
    for (const PQ& c : v) g = poly_gcd_euclid(g, c);
    return g;  // monic, or zero for the zero polynomial
}

VP vp_primitive(const VP& v) {
    if (v.empty()) return v;
    PQ c = vp_content(v);
    return c.degree() > 0 ? vp_div(v, c) : v;
}

// scale to integer coefficients with trivial common factor: subresultant
// arithmetic on integer-valued rationals avoids big-rational normalization
void vp_rescale_integer(VP& v) {
    Integer l = 1;
    for (const PQ& c : v)
        for (const Rational& r : c.coeffs()) l = boost::multiprecision::lcm(l, denominator(r));
    Integer g = 0;
    for (PQ& c : v) {
        std::vector<Rational> cs = c.coeffs();
        for (Rational& r : cs) {
            r *= l;
            g = boost::multiprecision::gcd(g, numerator(r));
        }
        c = PQ(std::move(cs));
    }
    if (g > 1)
        for (PQ& c : v) {
            std::vector<Rational> cs = c.coeffs();
            for (Rational& r : cs) r /= g;
            c = PQ(std::move(cs));
        }
}

PQ pq_pow(const PQ& b, int e) {
    PQ r(1);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// primitive gcd of primitive inputs, Collins' subresultant PRS
VP vp_gcd_subresultant(VP a, VP b) {
    if (vp_deg(a) < vp_deg(b)) std::swap(a, b);
    PQ g(1), h(1);
    while (true) {
        if (b.empty()) return vp_primitive(a);
        if (vp_deg(b) == 0) return VP{PQ(1)};
        int delta = vp_deg(a) - vp_deg(b);
        VP r = prem(a, b);
        a = b;
        b = r.empty() ? r : vp_div(r, g * pq_pow(h, delta));
        g = a.back();
        if (delta > 0) h = exact_div(pq_pow(g, delta), pq_pow(h, delta - 1));
    }
}

VP clear_denominators(const Poly<QRat>& p) {
    PQ l(1);
    for (int k = 0; k <= p.degree(); ++k) {
        QRat c = p.coeff(static_cast<unsigned>(k));
        l = exact_div(l * c.den(), poly_gcd_euclid(l, c.den()));  // lcm
    }
    VP r(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        QRat c = p.coeff(static_cast<unsigned>(k));
        r[static_cast<size_t>(k)] = c.num() * exact_div(l, c.den());
    }
    vp_trim(r);
    return r;
}

}  // namespace

template <>
Poly<QRat> poly_gcd<QRat>(Poly<QRat> a, Poly<QRat> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly<QRat>(1);
    // deg gcd(a|q=c, b|q=c) >= deg gcd(a, b) at any valid point, so a coprime
    // specialization proves coprimality over Q(q)
    for (long c : {2, 3, 5, 7, 11, 13, 17, 19}) {
        Poly<Rational> sa, sb;
        if (!specialize_at(a, Rational(c), &sa) || !specialize_at(b, Rational(c), &sb)) continue;
        if (poly_gcd_euclid(sa, sb).degree() == 0) return Poly<QRat>(1);
        break;
    }
    VP va = clear_denominators(a);
    VP vb = clear_denominators(b);
    vp_rescale_integer(va);
    vp_rescale_integer(vb);
    va = vp_primitive(va);
    vb = vp_primitive(vb);
    vp_rescale_integer(va);
    vp_rescale_integer(vb);
    VP g = vp_gcd_subresultant(std::move(va), std::move(vb));
    std::vector<QRat> coeffs(g.size());
    for (size_t i = 0; i < g.size(); ++i) coeffs[i] = QRat(g[i]);
    return Poly<QRat>(std::move(coeffs)).monic();
}

namespace {

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Sum of terms, each possibly starting with '-'.
std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

std::string format_qpoly(const Poly<Rational>& p) {
    std::vector<std::string> terms;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        std::string xpart;
        if (k == 1)
            xpart = "q";
        else if (k > 1)
            xpart = "q^" + std::to_string(k);
        if (xpart.empty())
            terms.push_back(format_rational(c));
        else if (c == 1)
            terms.push_back(xpart);
        else if (c == -1)
            terms.push_back("-" + xpart);
        else
            terms.push_back(format_rational(c) + "*" + xpart);
    }
    return join_terms(terms);
}

bool qpoly_is_atom(const Poly<Rational>& p) {
    // a single monomial with coefficient from Z (so "3", "q", "3*q^2")
    int nonzero = 0;
    for (int k = 0; k <= p.degree(); ++k)
        if (!(p.coeff(k) == 0)) ++nonzero;
    if (nonzero != 1) return false;
    Rational c = p.coeff(p.degree());
    return denominator(c) == 1 && c > 0;
}

}  // namespace

std::string format_qrat(const QRat& c) {
    if (c.is_polynomial()) return format_qpoly(c.num());
    std::string num = qpoly_is_atom(c.num()) ? format_qpoly(c.num())
                                             : "(" + format_qpoly(c.num()) + ")";
    return num + "/(" + format_qpoly(c.den()) + ")";
}

namespace {

// true if the printed form can be used as a multiplicative factor unchanged
bool qrat_is_atom(const QRat& c) {
    return c.is_polynomial() && qpoly_is_atom(c.num());
}

std::string format_xpoly(const Poly<QRat>& p) {
    std::vector<std::string> terms;
    for (int k = p.degree(); k >= 0; --k) {
        QRat c = p.coeff(k);
        if (c == QRat(0)) continue;
        std::string xpart;
        if (k == 1)
            xpart = "x";
        else if (k > 1)
            xpart = "x^" + std::to_string(k);
        if (xpart.empty()) {
            terms.push_back(format_qrat(c));
        } else if (c == QRat(1)) {
            terms.push_back(xpart);
        } else if (c == QRat(-1)) {
            terms.push_back("-" + xpart);
        } else if (qrat_is_atom(c)) {
            terms.push_back(format_qrat(c) + "*" + xpart);
        } else {
            terms.push_back("(" + format_qrat(c) + ")*" + xpart);
        }
    }
    return join_terms(terms);
}

}  // namespace

std::string format_scalar(const Scalar& f) {
    if (f.is_polynomial()) return format_xpoly(f.num());
    return "(" + format_xpoly(f.num()) + ")/(" + format_xpoly(f.den()) + ")";
}

}  // namespace pv
