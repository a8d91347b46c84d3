#ifndef PV_POLY_HPP
#define PV_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

namespace pv {

// Dense univariate polynomial over a field K. K must be constructible from
// int and support +, -, *, / and ==. Trailing zero coefficients are trimmed,
// so representation is canonical and equality is coefficientwise.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) {
        if (!(c == K(0))) c_.push_back(c);
    }
    Poly(int c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& lead() const { return c_.back(); }
    K coeff(unsigned i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = K(0) - x;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const K& s) const {
        std::vector<K> r = c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly rem = a;
        std::vector<K> q;
        if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, K(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            K f = rem.lead() / b.lead();
            int shift = rem.degree() - b.degree();
            q[shift] = f;
            std::vector<K> sub(shift + b.c_.size(), K(0));
            for (size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = b.c_[i] * f;
            rem = rem - Poly(std::move(sub));
        }
        return {Poly(std::move(q)), rem};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(r));
    }

    // p(a*x + b), exact composition with a linear polynomial
    Poly compose_linear(const K& a, const K& b) const {
        Poly lin(std::vector<K>{b, a});
        Poly res;
        for (int i = degree(); i >= 0; --i) res = res * lin + Poly(c_[i]);
        return res;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lead();
        return *this * inv;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

// Monic gcd via the Euclidean algorithm. Remainders are normalized to monic
// at every step: without this, coefficients in a fraction field (e.g. Q(q))
// grow exponentially along the remainder sequence.
template <class K>
Poly<K> poly_gcd_euclid(Poly<K> a, Poly<K> b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto [q, r] = Poly<K>::divrem(a, b);
        (void)q;
        a = b;
        b = r.monic();
    }
    return a;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly<K>(1);
    return poly_gcd_euclid(std::move(a), std::move(b));
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = Poly<K>::divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
        if (!r1.is_zero()) {  // normalize to keep coefficient growth in check
            K inv = K(1) / r1.lead();
            r1 = r1 * inv;
            s1 = s1 * inv;
            t1 = t1 * inv;
        }
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace pv

#endif
