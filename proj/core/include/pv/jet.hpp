#ifndef PV_JET_HPP
#define PV_JET_HPP

#include <vector>

#include "pv/matrix.hpp"

namespace pv {

// (n+1) x (n+1) grid of m x m blocks, lower triangular with all diagonal
// blocks equal. Used for the prolonged system matrix, the formal fundamental
// solution pattern and the image of a jet under the block embedding.
class BlockMatrix {
  public:
    BlockMatrix(unsigned order, unsigned dim)
        : order_(order), dim_(dim), blocks_(size_t(order + 1) * (order + 1), Matrix::zero(dim)) {}

    unsigned order() const { return order_; }
    unsigned dim() const { return dim_; }
    Matrix& block(unsigned r, unsigned c) { return blocks_[size_t(r) * (order_ + 1) + c]; }
    const Matrix& block(unsigned r, unsigned c) const {
        return blocks_[size_t(r) * (order_ + 1) + c];
    }

    bool is_lower_triangular() const;
    // single (n+1)m x (n+1)m matrix
    Matrix flatten() const;
    // top-left (k+1) x (k+1) block corner
    BlockMatrix truncate(unsigned k) const;

    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        return a.order_ == b.order_ && a.dim_ == b.dim_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) { return !(a == b); }

  private:
    unsigned order_, dim_;
    std::vector<Matrix> blocks_;
};

// Truncated sequence (B^(0), ..., B^(n)) of m x m matrices with Leibniz
// multiplication; models points of the differential Galois group at order n.
class Jet {
  public:
    Jet(unsigned order, unsigned dim)
        : order_(order), dim_(dim), comps_(order + 1, Matrix::zero(dim)) {}
    explicit Jet(std::vector<Matrix> comps);

    static Jet unit(unsigned order, unsigned dim);
    // jet (B, 0, ..., 0) of a plain constant matrix
    static Jet constant(const Matrix& b, unsigned order);

    unsigned order() const { return order_; }
    unsigned dim() const { return dim_; }
    Matrix& comp(unsigned k) { return comps_[k]; }
    const Matrix& comp(unsigned k) const { return comps_[k]; }

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.order_ == b.order_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  private:
    unsigned order_, dim_;
    std::vector<Matrix> comps_;
};

// Leibniz product: (B*C)^(k) = sum_i binom(k,i) B^(i) C^(k-i).
Jet jet_mul(const Jet& b, const Jet& c);

// Group inverse; requires B^(0) invertible.
Jet jet_inv(const Jet& b);

// Block embedding: block(r,c) = binom(r,c) * B^(r-c) for c <= r.
BlockMatrix jet_to_block(const Jet& b);

}  // namespace pv

#endif
