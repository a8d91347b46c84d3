#include "pv/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace pv {

Poly<Rational> cyclotomic_poly(unsigned n) {
    static std::map<unsigned, Poly<Rational>> cache;
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    Poly<Rational> p(std::move(xn));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = Poly<Rational>::divrem(p, cyclotomic_poly(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
        p = q;
    }
    cache[n] = p;
    return p;
}

CycField::CycField(unsigned n) : n_(n), phi_(cyclotomic_poly(n)) {}

std::shared_ptr<const CycField> CycField::make(unsigned n) {
    return std::shared_ptr<const CycField>(new CycField(n));
}

CycNum::CycNum(std::shared_ptr<const CycField> f, Poly<Rational> rep)
    : field_(std::move(f)), rep_(std::move(rep)) {
    rep_ = Poly<Rational>::divrem(rep_, field_->modulus()).second;
}

CycNum CycField::zero() const { return CycNum(shared_from_this(), Poly<Rational>()); }
CycNum CycField::one() const { return CycNum(shared_from_this(), Poly<Rational>(1)); }
CycNum CycField::from_rational(const Rational& r) const {
    return CycNum(shared_from_this(), Poly<Rational>(r));
}

CycNum CycField::root_of_unity(long k) const {
    long e = k % static_cast<long>(n_);
    if (e < 0) e += n_;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return CycNum(shared_from_this(), Poly<Rational>(std::move(c)));
}

namespace {
void require_same_field(const CycNum& a, const CycNum& b) {
    if (!a.field() || !b.field() || a.field()->conductor() != b.field()->conductor())
        throw std::invalid_argument("CycNum: mixed cyclotomic fields");
}
}  // namespace

bool operator==(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    return a.rep_ == b.rep_;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    return CycNum(a.field_, a.rep_ + b.rep_);
}

CycNum operator-(const CycNum& a) { return CycNum(a.field_, -a.rep_); }

CycNum operator-(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    return CycNum(a.field_, a.rep_ - b.rep_);
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    return CycNum(a.field_, a.rep_ * b.rep_);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    auto [g, s, t] = poly_xgcd(rep_, field_->modulus());
    (void)t;
    if (g.degree() != 0) throw std::logic_error("CycNum: modulus not coprime to element");
    return CycNum(field_, s * (Rational(1) / g.coeff(0)));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = rep_.degree(); k >= 0; --k) {
        Rational c = rep_.coeff(k);
        if (c == 0) continue;
        std::ostringstream os;
        os << c;
        std::string term = os.str();
        if (k > 0) {
            if (c == 1)
                term = "";
            else if (c == -1)
                term = "-";
            else
                term += "*";
            term += "zeta";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace pv
