#ifndef PV_PROLONG_HPP
#define PV_PROLONG_HPP

#include <vector>

#include "pv/jet.hpp"
#include "pv/matrix.hpp"
#include "pv/mpoly.hpp"

namespace pv {

// Rectangular matrix with formal-polynomial entries (used for the formal
// fundamental solution and the symbolic verifiers).
class MPolyMat {
  public:
    MPolyMat(unsigned rows, unsigned cols, const VarSpace& vs)
        : rows_(rows), cols_(cols), e_(size_t(rows) * cols, MPoly::zero(vs)) {}

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    MPoly& at(unsigned i, unsigned j) { return e_[size_t(i) * cols_ + j]; }
    const MPoly& at(unsigned i, unsigned j) const { return e_[size_t(i) * cols_ + j]; }

    friend bool operator==(const MPolyMat& a, const MPolyMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MPolyMat& a, const MPolyMat& b) { return !(a == b); }

  private:
    unsigned rows_, cols_;
    std::vector<MPoly> e_;
};

// Order-n prolongation of sigma(X) = AX into a pure difference system with
// block matrix A_n, block (j,i) = binom(j,i) * delta^(j-i)(A).
struct ProlongedSystem {
    OperatorSpec spec;
    Matrix base;
    unsigned order;
    BlockMatrix blocks;
};

// Throws std::domain_error if A is singular.
ProlongedSystem prolong_system(const OperatorSpec& spec, const Matrix& a, unsigned n);

// The formal block solution: block (j,i) = binom(j,i) * X^(j-i), as a
// flattened (n+1)m x (n+1)m matrix of formal polynomials over VarSpace{n,m}.
MPolyMat formal_solution_block(unsigned n, unsigned m);

// Image of X^(k)_ab under sigma, per the prolonged rewriting rule:
// sigma(X^(k)) = sum_i binom(k,i) delta^i(A) X^(k-i).
MPoly sigma_rewrite_var(const OperatorSpec& spec, const Matrix& a, const VarSpace& vs,
                        unsigned var_id);

// Checks sigma(X_n) = A_n * X_n symbolically for the given block matrix;
// the three-argument form builds A_n itself.
bool verify_fundamental_against(const OperatorSpec& spec, const Matrix& a, unsigned n,
                                const BlockMatrix& an);
bool verify_fundamental(const OperatorSpec& spec, const Matrix& a, unsigned n);

// Independent oracle: derive sigma(X^(j)) by applying delta j times to
// sigma(X) = AX with the Leibniz rule only, and compare against the binomial
// closed form.
bool eq2_from_leibniz(const OperatorSpec& spec, const Matrix& a, unsigned j);

}  // namespace pv

#endif
