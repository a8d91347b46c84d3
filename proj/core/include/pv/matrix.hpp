#ifndef PV_MATRIX_HPP
#define PV_MATRIX_HPP

#include <vector>

#include "pv/operator_spec.hpp"
#include "pv/scalar.hpp"

namespace pv {

// Dense square matrix over the carrier field.
class Matrix {
  public:
    Matrix() : m_(0) {}
    explicit Matrix(unsigned m) : m_(m), e_(size_t(m) * m, Scalar()) {}

    static Matrix identity(unsigned m);
    static Matrix zero(unsigned m) { return Matrix(m); }

    unsigned dim() const { return m_; }
    Scalar& at(unsigned i, unsigned j) { return e_[size_t(i) * m_ + j]; }
    const Scalar& at(unsigned i, unsigned j) const { return e_[size_t(i) * m_ + j]; }

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    unsigned m_;
    std::vector<Scalar> e_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& s);

// Exact determinant by fraction-free (Bareiss) elimination.
Scalar mat_det(const Matrix& a);

// Throws std::domain_error on a singular matrix.
Matrix mat_inv(const Matrix& a);

// Entrywise sigma / delta.
Matrix mat_sigma(const OperatorSpec& spec, const Matrix& a);
Matrix mat_delta(const OperatorSpec& spec, const Matrix& a);
Matrix mat_delta_iter(const OperatorSpec& spec, Matrix a, unsigned times);

}  // namespace pv

#endif
