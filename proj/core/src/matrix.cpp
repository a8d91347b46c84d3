#include "pv/matrix.hpp"

#include <stdexcept>

namespace pv {

Matrix Matrix::identity(unsigned m) {
    Matrix r(m);
    for (unsigned i = 0; i < m; ++i) r.at(i, i) = scalar_from_int(1);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {
void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Matrix: dimension mismatch");
}
}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned k = 0; k < a.dim(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (unsigned j = 0; j < a.dim(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix mat_scale(const Matrix& a, const Scalar& s) {
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) * s;
    return r;
}

Scalar mat_det(const Matrix& a) {
    unsigned m = a.dim();
    if (m == 0) return scalar_from_int(1);
    Matrix w = a;
    Scalar prev = scalar_from_int(1);
    bool negate = false;
    for (unsigned k = 0; k + 1 < m; ++k) {
        if (w.at(k, k).is_zero()) {
            unsigned p = k + 1;
            while (p < m && w.at(p, k).is_zero()) ++p;
            if (p == m) return Scalar();
            for (unsigned j = 0; j < m; ++j) std::swap(w.at(k, j), w.at(p, j));
            negate = !negate;
        }
        for (unsigned i = k + 1; i < m; ++i)
            for (unsigned j = k + 1; j < m; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    Scalar d = w.at(m - 1, m - 1);
    return negate ? -d : d;
}

Matrix mat_inv(const Matrix& a) {
    unsigned m = a.dim();
    Matrix w = a;
    Matrix r = Matrix::identity(m);
    for (unsigned k = 0; k < m; ++k) {
        unsigned p = k;
        while (p < m && w.at(p, k).is_zero()) ++p;
        if (p == m) throw std::domain_error("Matrix: singular matrix has no inverse");
        if (p != k)
            for (unsigned j = 0; j < m; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(r.at(k, j), r.at(p, j));
            }
        Scalar inv = w.at(k, k).inv();
        for (unsigned j = 0; j < m; ++j) {
            w.at(k, j) = w.at(k, j) * inv;
            r.at(k, j) = r.at(k, j) * inv;
        }
        for (unsigned i = 0; i < m; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            Scalar f = w.at(i, k);
            for (unsigned j = 0; j < m; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(k, j);
                r.at(i, j) = r.at(i, j) - f * r.at(k, j);
            }
        }
    }
    return r;
}

Matrix mat_sigma(const OperatorSpec& spec, const Matrix& a) {
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = spec.sigma(a.at(i, j));
    return r;
}

Matrix mat_delta(const OperatorSpec& spec, const Matrix& a) {
    Matrix r(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j) r.at(i, j) = spec.delta(a.at(i, j));
    return r;
}

Matrix mat_delta_iter(const OperatorSpec& spec, Matrix a, unsigned times) {
    for (unsigned t = 0; t < times; ++t) a = mat_delta(spec, a);
    return a;
}

}  // namespace pv
