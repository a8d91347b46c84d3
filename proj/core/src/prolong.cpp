#include "pv/prolong.hpp"

#include <stdexcept>

#include "pv/rational.hpp"

namespace pv {
namespace {

Scalar binom_scalar(unsigned n, unsigned k) { return scalar_from_rational(Rational(binomial(n, k))); }

}  // namespace

ProlongedSystem prolong_system(const OperatorSpec& spec, const Matrix& a, unsigned n) {
    if (mat_det(a).is_zero()) throw std::domain_error("prolong_system: singular system matrix");
    BlockMatrix blocks(n, a.dim());
    std::vector<Matrix> derivs{a};
    for (unsigned i = 1; i <= n; ++i) derivs.push_back(mat_delta(spec, derivs.back()));
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned i = 0; i <= j; ++i)
            blocks.block(j, i) = mat_scale(derivs[j - i], binom_scalar(j, i));
    return ProlongedSystem{spec, a, n, std::move(blocks)};
}

MPolyMat formal_solution_block(unsigned n, unsigned m) {
    VarSpace vs{n, m};
    MPolyMat x((n + 1) * m, (n + 1) * m, vs);
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned i = 0; i <= j; ++i) {
            Scalar coef = binom_scalar(j, i);
            for (unsigned a = 0; a < m; ++a)
                for (unsigned b = 0; b < m; ++b)
                    x.at(j * m + a, i * m + b) =
                        MPoly::variable(vs, vs.id(j - i, a, b)) * coef;
        }
    return x;
}

MPoly sigma_rewrite_var(const OperatorSpec& spec, const Matrix& a, const VarSpace& vs,
                        unsigned var_id) {
    unsigned k = vs.var_order(var_id);
    unsigned row = vs.var_row(var_id);
    unsigned col = vs.var_col(var_id);
    MPoly img = MPoly::zero(vs);
    Matrix deriv = a;
    for (unsigned i = 0; i <= k; ++i) {
        Scalar coef = binom_scalar(k, i);
        for (unsigned c = 0; c < a.dim(); ++c)
            img = img + MPoly::variable(vs, vs.id(k - i, c, col)) * (coef * deriv.at(row, c));
        if (i < k) deriv = mat_delta(spec, deriv);
    }
    return img;
}

bool verify_fundamental_against(const OperatorSpec& spec, const Matrix& a, unsigned n,
                                const BlockMatrix& an) {
    unsigned m = a.dim();
    VarSpace vs{n, m};
    MPolyMat x = formal_solution_block(n, m);

    std::vector<MPoly> sigma_images;
    sigma_images.reserve(vs.count());
    for (unsigned v = 0; v < vs.count(); ++v)
        sigma_images.push_back(sigma_rewrite_var(spec, a, vs, v));

    Matrix an_flat = an.flatten();
    unsigned sz = (n + 1) * m;
    for (unsigned i = 0; i < sz; ++i)
        for (unsigned j = 0; j < sz; ++j) {
            MPoly lhs = x.at(i, j)
                            .map_coeffs([&](const Scalar& c) { return spec.sigma(c); })
                            .substitute(sigma_images);
            MPoly rhs = MPoly::zero(vs);
            for (unsigned l = 0; l < sz; ++l) {
                const Scalar& c = an_flat.at(i, l);
                if (c.is_zero()) continue;
                rhs = rhs + x.at(l, j) * c;
            }
            if (lhs != rhs) return false;
        }
    return true;
}

bool verify_fundamental(const OperatorSpec& spec, const Matrix& a, unsigned n) {
    return verify_fundamental_against(spec, a, n, prolong_system(spec, a, n).blocks);
}

bool eq2_from_leibniz(const OperatorSpec& spec, const Matrix& a, unsigned j) {
    unsigned m = a.dim();
    VarSpace vs{j, m};

    // sigma(X) = A X, entrywise
    MPolyMat cur(m, m, vs);
    for (unsigned r = 0; r < m; ++r)
        for (unsigned c = 0; c < m; ++c) {
            MPoly p = MPoly::zero(vs);
            for (unsigned l = 0; l < m; ++l)
                p = p + MPoly::variable(vs, vs.id(0, l, c)) * a.at(r, l);
            cur.at(r, c) = p;
        }

    auto coeff_delta = [&](const Scalar& s) { return spec.delta(s); };
    auto var_image = [&](unsigned v) {
        unsigned k = vs.var_order(v);
        if (k >= vs.order)
            throw std::logic_error("eq2_from_leibniz: derivative beyond truncation order");
        return MPoly::variable(vs, vs.id(k + 1, vs.var_row(v), vs.var_col(v)));
    };
    for (unsigned step = 0; step < j; ++step) {
        MPolyMat next(m, m, vs);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c)
                next.at(r, c) = cur.at(r, c).apply_derivation(coeff_delta, var_image);
        cur = next;
    }

    // binomial closed form: sum_i binom(j,i) delta^i(A) X^(j-i)
    MPolyMat closed(m, m, vs);
    Matrix deriv = a;
    for (unsigned i = 0; i <= j; ++i) {
        Scalar coef = binom_scalar(j, i);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) {
                MPoly p = MPoly::zero(vs);
                for (unsigned l = 0; l < m; ++l)
                    p = p + MPoly::variable(vs, vs.id(j - i, l, c)) * (coef * deriv.at(r, l));
                closed.at(r, c) = closed.at(r, c) + p;
            }
        if (i < j) deriv = mat_delta(spec, deriv);
    }

    return cur == closed;
}

}  // namespace pv
