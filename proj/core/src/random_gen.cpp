#include "pv/random_gen.hpp"

namespace pv {
namespace {

QRat random_coeff(Rng& rng, const OperatorSpec& spec) {
    if (spec.allows_q() && rng.range(0, 3) == 0) {
        // small polynomial in q
        std::vector<Rational> c(2);
        c[0] = Rational(rng.range(-3, 3));
        c[1] = Rational(rng.range(-2, 2));
        return QRat(Poly<Rational>(std::move(c)));
    }
    return QRat(Rational(rng.range(-3, 3)));
}

Poly<QRat> random_xpoly(Rng& rng, const OperatorSpec& spec, unsigned deg, bool nonzero) {
    for (;;) {
        std::vector<QRat> c(deg + 1, QRat(0));
        for (unsigned i = 0; i <= deg; ++i) c[i] = random_coeff(rng, spec);
        Poly<QRat> p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

Scalar random_ratfunc(Rng& rng, const OperatorSpec& spec, unsigned deg) {
    return Scalar(random_xpoly(rng, spec, deg, false), random_xpoly(rng, spec, deg, true));
}

Matrix random_matrix(Rng& rng, const OperatorSpec& spec, unsigned m, unsigned deg) {
    Matrix a(m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            a.at(i, j) = Scalar(random_xpoly(rng, spec, deg, false));
    return a;
}

Matrix random_invertible_matrix(Rng& rng, const OperatorSpec& spec, unsigned m, unsigned deg) {
    for (;;) {
        Matrix a = random_matrix(rng, spec, m, deg);
        if (!mat_det(a).is_zero()) return a;
    }
}

Jet random_group_jet(Rng& rng, unsigned order, unsigned m) {
    Jet j(order, m);
    for (unsigned k = 0; k <= order; ++k) {
        Matrix b(m);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) b.at(r, c) = scalar_from_int(rng.range(-3, 3));
        j.comp(k) = b;
    }
    while (mat_det(j.comp(0)).is_zero()) {
        Matrix b(m);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) b.at(r, c) = scalar_from_int(rng.range(-3, 3));
        j.comp(0) = b;
    }
    return j;
}

}  // namespace pv
