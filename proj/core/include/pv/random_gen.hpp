#ifndef PV_RANDOM_GEN_HPP
#define PV_RANDOM_GEN_HPP

#include <cstdint>

#include "pv/jet.hpp"
#include "pv/matrix.hpp"

namespace pv {

// Deterministic generator with platform-independent draws (no reliance on
// std distribution implementations).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// Random reduced rational function with numerator/denominator degree <= deg
// and small integer coefficients; q-polynomial coefficients in q_dilation
// mode. Denominator is nonzero.
Scalar random_ratfunc(Rng& rng, const OperatorSpec& spec, unsigned deg);

// Polynomial-entry matrix with entries of degree <= deg.
Matrix random_matrix(Rng& rng, const OperatorSpec& spec, unsigned m, unsigned deg);

// Retries until det != 0.
Matrix random_invertible_matrix(Rng& rng, const OperatorSpec& spec, unsigned m, unsigned deg);

// Group jet over the constant field (B^(0) invertible, small integer or
// q-free entries).
Jet random_group_jet(Rng& rng, unsigned order, unsigned m);

}  // namespace pv

#endif
