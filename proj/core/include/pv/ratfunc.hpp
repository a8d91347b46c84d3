#ifndef PV_RATFUNC_HPP
#define PV_RATFUNC_HPP

#include <stdexcept>

#include "pv/poly.hpp"

namespace pv {

// Reduced rational function num/den over a field K. Invariant: den is monic
// and gcd(num, den) = 1, so equality is componentwise and canonical.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const K& c) : num_(c), den_(1) {}
    RatFunc(Poly<K> num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // add/multiply cancel cross factors up front so the final reduction gcd
    // runs on (nearly) coprime operands
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_polynomial() && b.is_polynomial()) {  // monic deg-0 dens are 1
            RatFunc r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        Poly<K> g = poly_gcd(a.den_, b.den_);
        if (g.degree() <= 0)
            return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly<K> ad = Poly<K>::divrem(a.den_, g).first;
        Poly<K> bd = Poly<K>::divrem(b.den_, g).first;
        return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        Poly<K> g1 = poly_gcd(a.num_, b.den_);
        Poly<K> g2 = poly_gcd(b.num_, a.den_);
        Poly<K> an = g1.degree() > 0 ? Poly<K>::divrem(a.num_, g1).first : a.num_;
        Poly<K> bd = g1.degree() > 0 ? Poly<K>::divrem(b.den_, g1).first : b.den_;
        Poly<K> bn = g2.degree() > 0 ? Poly<K>::divrem(b.num_, g2).first : b.num_;
        Poly<K> ad = g2.degree() > 0 ? Poly<K>::divrem(a.den_, g2).first : a.den_;
        return RatFunc(an * bn, ad * bd);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return a * b.inv();
    }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    // d/dx by the quotient rule; the repeated part of the denominator is
    // cancelled before the final reduction
    RatFunc derivative() const {
        Poly<K> dd = den_.derivative();
        Poly<K> g = poly_gcd(den_, dd);
        if (g.degree() <= 0)
            return RatFunc(num_.derivative() * den_ - num_ * dd, den_ * den_);
        Poly<K> u = Poly<K>::divrem(den_, g).first;
        Poly<K> v = Poly<K>::divrem(dd, g).first;
        return RatFunc(num_.derivative() * u - num_ * v, den_ * u);
    }

    // f(a*x + b)
    RatFunc compose_linear(const K& a, const K& b) const {
        return RatFunc(num_.compose_linear(a, b), den_.compose_linear(a, b));
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(1);
            return;
        }
        if (den_.degree() == 0) {
            K inv = K(1) / den_.lead();
            num_ = num_ * inv;
            den_ = Poly<K>(1);
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divrem(num_, g).first;
            den_ = Poly<K>::divrem(den_, g).first;
        }
        K inv = K(1) / den_.lead();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    Poly<K> num_, den_;
};

}  // namespace pv

#endif
