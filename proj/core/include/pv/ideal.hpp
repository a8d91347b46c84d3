#ifndef PV_IDEAL_HPP
#define PV_IDEAL_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "pv/jet.hpp"
#include "pv/mpoly.hpp"

namespace pv {

// Buchberger ran out of its step budget; distinct from a mathematical "no".
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerOptions {
    // max number of polynomial reduction steps across the whole run
    unsigned long budget = 200000;
};

// Finitely generated ideal in jet variables with a lazily cached reduced
// Groebner basis (degrevlex over the fixed (j,a,b) variable enumeration).
class IdealGens {
  public:
    IdealGens(const VarSpace& vs, std::vector<MPoly> gens, GroebnerOptions opts = {});

    const VarSpace& space() const { return vs_; }
    const std::vector<MPoly>& generators() const { return gens_; }
    const std::vector<MPoly>& groebner() const;  // computes and caches

    unsigned order() const { return vs_.order; }
    unsigned dim() const { return vs_.dim; }

  private:
    VarSpace vs_;
    std::vector<MPoly> gens_;
    GroebnerOptions opts_;
    mutable std::optional<std::vector<MPoly>> gb_;
};

// Reduced Groebner basis of the given generators.
std::vector<MPoly> groebner_basis(const VarSpace& vs, const std::vector<MPoly>& gens,
                                  const GroebnerOptions& opts = {});

// Normal form of p modulo a Groebner basis.
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, const GroebnerOptions& opts = {});

bool ideal_member(const MPoly& p, const IdealGens& ideal);

// The action g_B: each Y^(j) is replaced by sum_i binom(j,i) Y^(i) B^(j-i).
MPoly substitute_gB(const MPoly& p, const Jet& b);

// True iff substitute_gB(g, B) lies in the ideal for every generator g.
// failing_generator receives the index of the first violated generator.
bool invariance_check(const IdealGens& ideal, const Jet& b,
                      std::optional<size_t>* failing_generator = nullptr);

struct StabilizationReport {
    bool stabilized = false;
    unsigned level = 0;  // least n with stable verdicts for all test jets
    std::vector<std::vector<bool>> verdicts;  // [jet][level]
};

// Heuristic scan over a user-supplied tower I_0..I_N: reports the least level
// from which the invariance verdict of every test jet stays constant through
// level N. Never claims a true stabilization bound.
StabilizationReport stabilization_scan(const std::vector<IdealGens>& tower,
                                       const std::vector<Jet>& test_jets);

// Division-free cross-check for ideal membership: exhaustive linear algebra
// over all monomial multiples of the generators up to a degree cap.
// Independent of the Groebner path; intended for small instances.
bool dense_membership_oracle(const MPoly& p, const std::vector<MPoly>& gens, unsigned degree_cap);

}  // namespace pv

#endif
