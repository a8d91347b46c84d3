#ifndef PV_CYCLOTOMIC_HPP
#define PV_CYCLOTOMIC_HPP

#include <memory>
#include <string>

#include "pv/poly.hpp"
#include "pv/rational.hpp"

namespace pv {

// N-th cyclotomic polynomial over Q.
Poly<Rational> cyclotomic_poly(unsigned n);

class CycNum;

// The field Q(zeta_N), elements represented modulo Phi_N.
class CycField : public std::enable_shared_from_this<CycField> {
  public:
    static std::shared_ptr<const CycField> make(unsigned n);

    unsigned conductor() const { return n_; }
    const Poly<Rational>& modulus() const { return phi_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.degree()); }

    CycNum zero() const;
    CycNum one() const;
    CycNum from_rational(const Rational& r) const;
    // zeta_N^k
    CycNum root_of_unity(long k = 1) const;

  private:
    explicit CycField(unsigned n);
    unsigned n_;
    Poly<Rational> phi_;
};

// Element of Q(zeta_N): a polynomial in zeta reduced mod Phi_N. Exact.
class CycNum {
  public:
    CycNum() = default;

    const std::shared_ptr<const CycField>& field() const { return field_; }
    bool is_zero() const { return rep_.is_zero(); }
    const Poly<Rational>& rep() const { return rep_; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum inv() const;

    std::string to_string() const;

  private:
    friend class CycField;
    CycNum(std::shared_ptr<const CycField> f, Poly<Rational> rep);
    std::shared_ptr<const CycField> field_;
    Poly<Rational> rep_;
};

}  // namespace pv

#endif
