#include "pv/jet.hpp"

#include <stdexcept>

#include "pv/rational.hpp"

namespace pv {

bool BlockMatrix::is_lower_triangular() const {
    for (unsigned r = 0; r <= order_; ++r)
        for (unsigned c = r + 1; c <= order_; ++c)
            if (!block(r, c).is_zero()) return false;
    return true;
}

Matrix BlockMatrix::flatten() const {
    unsigned n = (order_ + 1) * dim_;
    Matrix f(n);
    for (unsigned r = 0; r <= order_; ++r)
        for (unsigned c = 0; c <= order_; ++c)
            for (unsigned i = 0; i < dim_; ++i)
                for (unsigned j = 0; j < dim_; ++j)
                    f.at(r * dim_ + i, c * dim_ + j) = block(r, c).at(i, j);
    return f;
}

BlockMatrix BlockMatrix::truncate(unsigned k) const {
    if (k > order_) throw std::invalid_argument("BlockMatrix: truncation above order");
    BlockMatrix t(k, dim_);
    for (unsigned r = 0; r <= k; ++r)
        for (unsigned c = 0; c <= k; ++c) t.block(r, c) = block(r, c);
    return t;
}

Jet::Jet(std::vector<Matrix> comps) {
    if (comps.empty()) throw std::invalid_argument("Jet: empty component list");
    order_ = static_cast<unsigned>(comps.size()) - 1;
    dim_ = comps.front().dim();
    for (const auto& m : comps)
        if (m.dim() != dim_) throw std::invalid_argument("Jet: inconsistent block dimensions");
    comps_ = std::move(comps);
}

Jet Jet::unit(unsigned order, unsigned dim) {
    Jet j(order, dim);
    j.comp(0) = Matrix::identity(dim);
    return j;
}

Jet Jet::constant(const Matrix& b, unsigned order) {
    Jet j(order, b.dim());
    j.comp(0) = b;
    return j;
}

Jet jet_mul(const Jet& b, const Jet& c) {
    if (b.order() != c.order() || b.dim() != c.dim())
        throw std::invalid_argument("jet_mul: order/dimension mismatch");
    Jet r(b.order(), b.dim());
    for (unsigned k = 0; k <= b.order(); ++k) {
        Matrix acc = Matrix::zero(b.dim());
        for (unsigned i = 0; i <= k; ++i) {
            Scalar coef = scalar_from_rational(Rational(binomial(k, i)));
            acc = mat_add(acc, mat_scale(mat_mul(b.comp(i), c.comp(k - i)), coef));
        }
        r.comp(k) = acc;
    }
    return r;
}

Jet jet_inv(const Jet& b) {
    Matrix b0inv = mat_inv(b.comp(0));
    Jet r(b.order(), b.dim());
    r.comp(0) = b0inv;
    // solve sum_i binom(k,i) B^(i) C^(k-i) = 0 for C^(k), k >= 1
    for (unsigned k = 1; k <= b.order(); ++k) {
        Matrix acc = Matrix::zero(b.dim());
        for (unsigned i = 1; i <= k; ++i) {
            Scalar coef = scalar_from_rational(Rational(binomial(k, i)));
            acc = mat_add(acc, mat_scale(mat_mul(b.comp(i), r.comp(k - i)), coef));
        }
        r.comp(k) = mat_scale(mat_mul(b0inv, acc), scalar_from_int(-1));
    }
    return r;
}

BlockMatrix jet_to_block(const Jet& b) {
    BlockMatrix m(b.order(), b.dim());
    for (unsigned r = 0; r <= b.order(); ++r)
        for (unsigned c = 0; c <= r; ++c) {
            Scalar coef = scalar_from_rational(Rational(binomial(r, c)));
            m.block(r, c) = mat_scale(b.comp(r - c), coef);
        }
    return m;
}

}  // namespace pv
