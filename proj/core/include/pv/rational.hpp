#ifndef PV_RATIONAL_HPP
#define PV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; arguments are small (prolongation orders).
inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace pv

#endif
