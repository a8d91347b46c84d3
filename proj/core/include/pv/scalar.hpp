#ifndef PV_SCALAR_HPP
#define PV_SCALAR_HPP

#include <string>

#include "pv/poly.hpp"
#include "pv/ratfunc.hpp"
#include "pv/rational.hpp"

namespace pv {

// Coefficient domain: rational functions in the formal symbol q over Q.
// In shift mode q never occurs, so coefficients degenerate to plain rationals.
using QRat = RatFunc<Rational>;

// Carrier field elements: rational functions in x over QRat.
using Scalar = RatFunc<QRat>;

inline QRat qrat_q() { return QRat::variable(); }

inline Scalar scalar_x() { return Scalar::variable(); }
inline Scalar scalar_q() { return Scalar(QRat::variable()); }

inline Scalar scalar_from_rational(const Rational& r) { return Scalar(QRat(r)); }
inline Scalar scalar_from_int(long n) { return scalar_from_rational(Rational(n)); }

// Fast gcd over Q(q): a specialization of q at a good rational point proves
// coprimality in the common case; exact Euclid only runs on the remainder of
// cases. Without it, coefficient growth in the Q(q) remainder sequence makes
// reduction of random functions impractically slow.
template <>
Poly<QRat> poly_gcd<QRat>(Poly<QRat> a, Poly<QRat> b);

// Canonical textual form; parse_ratfunc(format_scalar(f)) == f.
std::string format_scalar(const Scalar& f);

std::string format_qrat(const QRat& c);

}  // namespace pv

#endif
