#ifndef PV_MPOLY_HPP
#define PV_MPOLY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pv/scalar.hpp"

namespace pv {

// The jet variables Y^(j)_ab (or X^(j)_ab) for 0 <= j <= order,
// 1 <= a,b <= dim, enumerated lexicographically by (j, a, b).
struct VarSpace {
    unsigned order = 0;
    unsigned dim = 1;

    unsigned count() const { return (order + 1) * dim * dim; }
    unsigned id(unsigned j, unsigned a, unsigned b) const {
        return (j * dim + a) * dim + b;  // a, b are 0-based here
    }
    unsigned var_order(unsigned id) const { return id / (dim * dim); }
    unsigned var_row(unsigned id) const { return (id / dim) % dim; }
    unsigned var_col(unsigned id) const { return id % dim; }
    std::string name(unsigned id, const std::string& prefix = "Y") const;

    friend bool operator==(const VarSpace& a, const VarSpace& b) {
        return a.order == b.order && a.dim == b.dim;
    }
};

using Mono = std::vector<unsigned>;

unsigned mono_degree(const Mono& m);

// degree-reverse-lexicographic, "greater" so map iteration starts at the
// leading term
struct DegRevLexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Multivariate polynomial in jet variables with RatFunc coefficients.
class MPoly {
  public:
    using TermMap = std::map<Mono, Scalar, DegRevLexGreater>;

    explicit MPoly(const VarSpace& vs) : vs_(vs) {}

    static MPoly zero(const VarSpace& vs) { return MPoly(vs); }
    static MPoly constant(const VarSpace& vs, const Scalar& c);
    static MPoly variable(const VarSpace& vs, unsigned id);

    const VarSpace& space() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    const Mono& lead_mono() const { return terms_.begin()->first; }
    const Scalar& lead_coeff() const { return terms_.begin()->second; }

    void add_term(const Mono& m, const Scalar& c);

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vs_ == b.vs_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Scalar& s) const;

    // divide by the leading coefficient
    MPoly monic() const;

    // replace variable id v by images[v]; images must live in the same space
    MPoly substitute(const std::vector<MPoly>& images) const;

    // apply f to every coefficient
    MPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

    // derivation extended by the Leibniz rule: coeff_delta acts on
    // coefficients, var_image(v) is the image of variable v
    MPoly apply_derivation(const std::function<Scalar(const Scalar&)>& coeff_delta,
                           const std::function<MPoly(unsigned)>& var_image) const;

    std::string to_string(const std::string& prefix = "Y") const;

  private:
    VarSpace vs_;
    TermMap terms_;
};

}  // namespace pv

#endif
