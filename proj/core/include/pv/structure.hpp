#ifndef PV_STRUCTURE_HPP
#define PV_STRUCTURE_HPP

#include <vector>

#include "pv/cyclotomic.hpp"
#include "pv/matrix.hpp"

namespace pv {

// Twisted sigma-power product A_l = sigma^{l-1}(A) ... sigma(A) A.
Matrix sigma_power_product(const OperatorSpec& spec, const Matrix& a, unsigned l);

// Cocycle law A_{a+b} = sigma^b(A_a) * A_b, checked exactly.
bool cocycle_check(const OperatorSpec& spec, const Matrix& a, unsigned pow_a, unsigned pow_b);

// The finite ring C[y_1,...,y_m]/(y_i^{r_i} - 1) over C = Q(zeta_N),
// N = lcm(r_i), with the difference action sigma(y_i) = zeta_N^{N/r_i} y_i
// (identity on C) and delta = 0. Basis monomials y^e are indexed by
// mixed-radix exponent tuples.
class MonomialModel {
  public:
    explicit MonomialModel(std::vector<unsigned> exponents);

    const std::vector<unsigned>& exponents() const { return r_; }
    unsigned num_vars() const { return static_cast<unsigned>(r_.size()); }
    unsigned conductor() const { return n_; }
    const std::shared_ptr<const CycField>& constants() const { return field_; }
    size_t ring_dim() const { return dim_; }

    size_t index_of(const std::vector<unsigned>& exps) const;
    std::vector<unsigned> exps_of(size_t index) const;

    // sigma scales basis monomial y^e by zeta^{sum_i e_i N/r_i}
    CycNum sigma_eigenvalue(size_t basis_index) const;

  private:
    std::vector<unsigned> r_;
    unsigned n_;
    size_t dim_;
    std::shared_ptr<const CycField> field_;
};

// Element of a monomial model ring: coefficients on the monomial basis.
class ModelElem {
  public:
    ModelElem(const MonomialModel* model, std::vector<CycNum> coeffs)
        : model_(model), c_(std::move(coeffs)) {}

    static ModelElem zero(const MonomialModel& model);
    static ModelElem one(const MonomialModel& model);

    const MonomialModel* model() const { return model_; }
    const CycNum& coeff(size_t i) const { return c_[i]; }
    CycNum& coeff(size_t i) { return c_[i]; }
    bool is_zero() const;

    friend bool operator==(const ModelElem& a, const ModelElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ModelElem& a, const ModelElem& b) { return !(a == b); }
    friend ModelElem operator+(const ModelElem& a, const ModelElem& b);
    friend ModelElem operator-(const ModelElem& a, const ModelElem& b);
    friend ModelElem operator*(const ModelElem& a, const ModelElem& b);

    ModelElem scaled(const CycNum& s) const;
    ModelElem apply_sigma() const;

  private:
    const MonomialModel* model_;
    std::vector<CycNum> c_;
};

// Complete list of primitive idempotents (products of the per-variable
// discrete-Fourier idempotents).
std::vector<ModelElem> primitive_idempotents(const MonomialModel& model);

struct DecompositionReport {
    unsigned num_idempotents = 0;
    std::vector<std::vector<size_t>> orbits;  // sigma-orbits, as idempotent indices
    unsigned l = 0;                           // orbit length when there is a single orbit
    bool single_orbit = false;
    bool sigma_l_fixes_all = false;  // sigma^l fixes every primitive idempotent
    size_t automorphism_group_order = 0;
};

DecompositionReport sigma_orbits(const MonomialModel& model);

// A ring automorphism fixing the constants and commuting with sigma and
// delta: y_i -> zeta_N^{(N/r_i) t_i} y_i. Identified by the tuple t.
struct ModelAutomorphism {
    std::vector<unsigned> t;
};

struct AutomorphismGroup {
    std::vector<ModelAutomorphism> elements;
    std::vector<unsigned> generator_orders;  // one per variable: r_i
    size_t order() const { return elements.size(); }
    bool is_cyclic = false;
};

AutomorphismGroup enumerate_automorphisms(const MonomialModel& model);

ModelElem apply_automorphism(const MonomialModel& model, const ModelAutomorphism& g,
                             const ModelElem& x);

struct ExactSequenceReport {
    bool exact = false;
    unsigned l = 0;
    size_t group_order = 0;
    size_t kernel_order = 0;
    size_t component_aut_order = 0;
    bool surjective = false;
    bool homomorphism = false;
};

// Validates 0 -> Aut(component) -> H -> Z/lZ -> 0 by exhaustive enumeration
// on a single-orbit model: computes the shift each automorphism induces on
// the idempotent orbit, checks it is a surjective morphism onto Z/lZ with
// kernel the component-preserving automorphisms, and |H| = |ker| * l.
ExactSequenceReport exact_sequence_check(const MonomialModel& model);

}  // namespace pv

#endif
