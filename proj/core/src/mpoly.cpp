#include "pv/mpoly.hpp"

#include <stdexcept>

namespace pv {

std::string VarSpace::name(unsigned id, const std::string& prefix) const {
    return prefix + std::to_string(var_order(id)) + "_" + std::to_string(var_row(id) + 1) +
           std::to_string(var_col(id) + 1);
}

unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool DegRevLexGreater::operator()(const Mono& a, const Mono& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    // degrevlex: with equal degree, a > b iff the last nonzero entry of a-b
    // is negative
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MPoly MPoly::constant(const VarSpace& vs, const Scalar& c) {
    MPoly p(vs);
    p.add_term(Mono(vs.count(), 0), c);
    return p;
}

MPoly MPoly::variable(const VarSpace& vs, unsigned id) {
    if (id >= vs.count()) throw std::invalid_argument("MPoly: variable id out of range");
    MPoly p(vs);
    Mono m(vs.count(), 0);
    m[id] = 1;
    p.add_term(m, scalar_from_int(1));
    return p;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

void MPoly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (!(a.vs_ == b.vs_)) throw std::invalid_argument("MPoly: variable-space mismatch");
    MPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MPoly operator-(const MPoly& a) {
    MPoly r(a.vs_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (!(a.vs_ == b.vs_)) throw std::invalid_argument("MPoly: variable-space mismatch");
    MPoly r(a.vs_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Scalar& s) const {
    MPoly r(vs_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead_coeff().inv();
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != vs_.count()) throw std::invalid_argument("MPoly: wrong image count");
    MPoly r(vs_);
    for (const auto& [m, c] : terms_) {
        MPoly t = MPoly::constant(vs_, c);
        for (size_t v = 0; v < m.size(); ++v)
            for (unsigned e = 0; e < m[v]; ++e) t = t * images[v];
        r = r + t;
    }
    return r;
}

MPoly MPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
    MPoly r(vs_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
}

MPoly MPoly::apply_derivation(const std::function<Scalar(const Scalar&)>& coeff_delta,
                              const std::function<MPoly(unsigned)>& var_image) const {
    MPoly r(vs_);
    for (const auto& [m, c] : terms_) {
        r.add_term(m, coeff_delta(c));
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            Mono reduced = m;
            reduced[v] -= 1;
            MPoly rest(vs_);
            rest.add_term(reduced, c * scalar_from_int(static_cast<long>(m[v])));
            r = r + rest * var_image(static_cast<unsigned>(v));
        }
    }
    return r;
}

std::string MPoly::to_string(const std::string& prefix) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string term = "(" + format_scalar(c) + ")";
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            term += "*" + vs_.name(static_cast<unsigned>(v), prefix);
            if (m[v] > 1) term += "^" + std::to_string(m[v]);
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

}  // namespace pv
